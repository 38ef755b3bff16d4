import type {
  ApiErrorBody,
  EvaluateResponse,
  HealthResponse,
  RatingsResponse,
  SimplifyResponse,
  ReadabilityReport,
} from './types.js'

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>

export class ApiError extends Error {
  readonly code: string
  readonly status: number
  readonly detail: unknown

  constructor(status: number, body: ApiErrorBody) {
    super(body.message)
    this.code = body.code
    this.status = status
    this.detail = body.detail
  }
}

/** Thin typed client for the /v1 REST API; the only network access the UI has. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}/v1${path}`, {
      method,
      headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    })
    const text = await response.text()
    let parsed: unknown = null
    try {
      parsed = text ? JSON.parse(text) : null
    } catch {
      parsed = null
    }
    if (!response.ok) {
      const fallback: ApiErrorBody = {
        code: 'internal',
        message: `HTTP ${response.status}`,
        detail: null,
      }
      throw new ApiError(response.status, (parsed as ApiErrorBody) ?? fallback)
    }
    return parsed as T
  }

  simplify(params: {
    text: string
    backend_id: string
    metrics: string[]
    diagnostics: boolean
  }): Promise<SimplifyResponse> {
    return this.request('POST', '/simplify', params)
  }

  assess(params: { text: string; language: string; metrics: string[] }): Promise<ReadabilityReport> {
    return this.request('POST', '/assess', params)
  }

  evaluate(params: {
    corpus_id: string
    backend_id: string
    metric: string
    mode: string
    top_k: number
  }): Promise<EvaluateResponse> {
    return this.request('POST', '/evaluate', params)
  }

  submitRating(params: {
    topic_id: string
    rater_id: string
    backend_id: string
    simplicity: number
    fluency: number
    adequacy: number
  }): Promise<{ id: number }> {
    return this.request('POST', '/ratings', params)
  }

  ratings(topicId: string, backendId?: string): Promise<RatingsResponse> {
    const query = backendId
      ? `?topic_id=${encodeURIComponent(topicId)}&backend_id=${encodeURIComponent(backendId)}`
      : `?topic_id=${encodeURIComponent(topicId)}`
    return this.request('GET', `/ratings${query}`)
  }

  health(): Promise<HealthResponse> {
    return this.request('GET', '/health')
  }
}
