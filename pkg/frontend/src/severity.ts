/**
 * Severity-to-color mapping. The CSS class names are identical to the ones
 * the server's static renderer emits, so both surfaces color alike.
 */

import type { SeverityColor } from './types.js';

export const SEVERITY_ORDER: readonly SeverityColor[] = ['red', 'orange', 'yellow'];

export const FYI_COLOR = 'green';

export function severityClass(color: SeverityColor | typeof FYI_COLOR): string {
  return `severity-${color}`;
}
