/**
 * Wire types for the label service API. These mirror the canonical JSON
 * documents exactly; the viewer never reshapes or re-derives them.
 */

export type SeverityColor = 'red' | 'orange' | 'yellow';

export interface ScopeEntry {
  kind: 'global' | 'use_case' | 'pair';
  use_case?: string;
  prediction?: string;
}

export interface Prediction {
  id: string;
  title: string;
  method_description: string;
}

export interface UseCase {
  id: string;
  title: string;
  description: string;
  predictions: Prediction[];
}

export interface Alert {
  id: string;
  title: string;
  description: string;
  severity: SeverityColor;
  mitigation?: string;
  scope: ScopeEntry[];
  derived_from_question?: string;
}

export interface Fyi {
  id: string;
  title: string;
  description: string;
  scope: ScopeEntry[];
  derived_from_question?: string;
}

export interface FlagRule {
  kind: 'alert' | 'fyi';
  severity?: SeverityColor;
  mitigation?: string;
  scope: ScopeEntry[];
  summary: string;
}

export interface QuestionnaireEntry {
  question_id: string;
  category: string;
  question_text: string;
  answer: string;
  flag?: FlagRule;
}

export interface KeyFactsModule {
  kind: 'key_facts';
  facts: Record<string, string>;
}

export interface ComputedStatsModule {
  kind: 'computed_stats';
  row_count: number;
  column_count: number;
  columns: { name: string; inferred_type: string; missing_fraction: number }[];
}

export interface BadgesModule {
  kind: 'badges';
  use_case_count: number;
  alert_count: number;
  fyi_count: number;
}

export interface FreeTextModule {
  kind: 'free_text';
  title: string;
  text: string;
}

export type OverviewModule =
  | KeyFactsModule
  | ComputedStatsModule
  | BadgesModule
  | FreeTextModule;

export interface StructuralFingerprint {
  column_names: string[];
  digest: string;
}

export interface LabelDocument {
  label_id: string;
  schema_version: string;
  dataset_name: string;
  publisher: string;
  source_url?: string;
  license?: string;
  date_produced: string;
  fingerprint?: StructuralFingerprint;
  overview_modules: OverviewModule[];
  use_cases: UseCase[];
  alerts: Alert[];
  fyis: Fyi[];
  questionnaire: QuestionnaireEntry[];
}

export interface LabelSummary {
  label_id: string;
  dataset_name: string;
  publisher: string;
  date_produced: string;
}

export interface ResolvedView {
  use_case_id: string;
  prediction_id: string;
  alerts: Alert[];
  fyis: Fyi[];
  severity_summary: Record<SeverityColor, number>;
}

export interface ComparisonEntry {
  label_id: string;
  dataset_name: string;
  status: 'matched' | 'not_applicable';
  severity_counts: Record<SeverityColor, number>;
  fyi_count: number;
  date_produced: string;
  matched_use_case?: string;
  row_count?: number;
}

export interface ComparisonReport {
  use_case_title: string;
  entries: ComparisonEntry[];
  generated_at: string;
}

export const CATEGORY_ORDER = [
  'Description',
  'Composition',
  'Provenance',
  'Collection',
  'Management',
] as const;
