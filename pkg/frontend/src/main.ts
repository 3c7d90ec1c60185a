/**
 * Browser bootstrap: mount the viewer on #app, pointing at the label
 * service. Override the service origin with ?api=… and the initially
 * opened label with ?label=….
 */

import { createApp } from './app.js';

const params = new URLSearchParams(window.location.search);
const apiBase = params.get('api') ?? 'http://127.0.0.1:8347';

const mount = document.getElementById('app');
if (!mount) {
  throw new Error('missing #app mount point');
}

const app = createApp(mount, { apiBase });
void app.init(params.get('label'));
