/**
 * Typed client over the label service HTTP API. Every method is a thin
 * fetch wrapper returning the service's JSON untouched; the viewer holds
 * no resolution logic of its own.
 */

import type {
  ComparisonReport,
  LabelDocument,
  LabelSummary,
  ResolvedView,
  UseCase,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

export type FetchFn = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchFn = (input, init) => fetch(input, init),
  ) {}

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, { signal });
    } catch (error) {
      if (error instanceof DOMException && error.name === 'AbortError') throw error;
      throw new ApiError(0, 'UNREACHABLE', `cannot reach ${this.baseUrl}`);
    }
    const body = await response.text();
    if (!response.ok) {
      let code = 'HTTP_ERROR';
      let message = body;
      try {
        const parsed = JSON.parse(body) as { code?: string; message?: string };
        code = parsed.code ?? code;
        message = parsed.message ?? message;
      } catch {
        // non-JSON error body; keep raw text
      }
      throw new ApiError(response.status, code, message);
    }
    return JSON.parse(body) as T;
  }

  listLabels(): Promise<LabelSummary[]> {
    return this.get('/labels');
  }

  getLabel(labelId: string): Promise<LabelDocument> {
    return this.get(`/labels/${encodeURIComponent(labelId)}`);
  }

  getUseCases(labelId: string): Promise<UseCase[]> {
    return this.get(`/labels/${encodeURIComponent(labelId)}/use-cases`);
  }

  resolve(
    labelId: string,
    useCaseId: string,
    predictionId: string,
    signal?: AbortSignal,
  ): Promise<ResolvedView> {
    const params = new URLSearchParams({ use_case: useCaseId, prediction: predictionId });
    return this.get(`/labels/${encodeURIComponent(labelId)}/resolve?${params}`, signal);
  }

  compare(useCaseTitle: string, labelIds: string[]): Promise<ComparisonReport> {
    const params = new URLSearchParams({ use_case: useCaseTitle, ids: labelIds.join(',') });
    return this.get(`/compare?${params}`);
  }
}
