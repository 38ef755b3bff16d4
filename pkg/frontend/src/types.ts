// Shapes of the /v1 API bodies the UI consumes. The UI never computes a
// metric itself; every number rendered comes from one of these fields.

export type Language = 'nl' | 'en'

export type Severity = 'info' | 'warning' | 'error'

export interface Finding {
  check_id: string
  severity: Severity
  message: string
  source_span: [number, number] | null
  simplified_span: [number, number] | null
}

export interface ReadabilityReport {
  language: Language
  text_scores: Record<string, number>
  sentence_scores: [number, number][] | null
  warnings: string[]
}

export interface Substitution {
  original: string
  replacement: string
  source_span: [number, number]
}

export interface SimplificationResult {
  source: string
  simplified: string
  backend_id: string
  stage_outputs: [string, string][]
  substitutions: Substitution[]
  considered: { word: string; source_span: [number, number] }[]
  latency_ms: number
}

export interface SimplifyResponse {
  result: SimplificationResult
  source_report: ReadabilityReport | null
  simplified_report: ReadabilityReport | null
  findings: Finding[]
}

export interface EvalRow {
  topic_id: string
  backend_id: string
  bleu: number
}

export interface EvaluateResponse {
  rows: EvalRow[]
  failed: string[]
}

export interface RatingAggregate {
  topic_id: string
  backend_id: string
  count: number
  simplicity: number
  fluency: number
  adequacy: number
  display: { simplicity: number; fluency: number; adequacy: number }
}

export interface RatingsResponse {
  aggregates: RatingAggregate[]
}

export interface HealthBackend {
  backend_id: string
  reachable: boolean
}

export interface HealthResponse {
  status: string
  backends: HealthBackend[]
}

export interface ApiErrorBody {
  code: string
  message: string
  detail: unknown
}
