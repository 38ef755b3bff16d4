import { describe, expect, it } from 'vitest'

import { ApiClient, ApiError } from '../src/api'

function capture(status: number, body: unknown) {
  const calls: { input: string; init?: RequestInit }[] = []
  const fetchFn = async (input: string, init?: RequestInit) => {
    calls.push({ input, init })
    return new Response(JSON.stringify(body), { status })
  }
  return { calls, fetchFn }
}

describe('ApiClient', () => {
  it('posts simplify requests to /v1/simplify', async () => {
    const stub = capture(200, { result: {}, source_report: null, simplified_report: null, findings: [] })
    const client = new ApiClient('http://svc', stub.fetchFn)
    await client.simplify({ text: 'x', backend_id: 'mock', metrics: ['smog'], diagnostics: true })
    expect(stub.calls[0].input).toBe('http://svc/v1/simplify')
    expect(stub.calls[0].init?.method).toBe('POST')
    expect(JSON.parse(stub.calls[0].init?.body as string)).toEqual({
      text: 'x',
      backend_id: 'mock',
      metrics: ['smog'],
      diagnostics: true,
    })
  })

  it('encodes rating query parameters', async () => {
    const stub = capture(200, { aggregates: [] })
    const client = new ApiClient('', stub.fetchFn)
    await client.ratings('topic met spatie', 'mock')
    expect(stub.calls[0].input).toBe('/v1/ratings?topic_id=topic%20met%20spatie&backend_id=mock')
  })

  it('raises typed errors with the service code', async () => {
    const stub = capture(404, { code: 'not_found', message: 'unknown corpus: x', detail: null })
    const client = new ApiClient('', stub.fetchFn)
    const error = await client
      .evaluate({ corpus_id: 'x', backend_id: 'mock', metric: 'bleu', mode: 'pooled', top_k: 5 })
      .catch((e: unknown) => e)
    expect(error).toBeInstanceOf(ApiError)
    expect((error as ApiError).code).toBe('not_found')
    expect((error as ApiError).status).toBe(404)
  })

  it('falls back to a generic error on non-JSON failures', async () => {
    const fetchFn = async () => new Response('gateway exploded', { status: 502 })
    const client = new ApiClient('', fetchFn)
    const error = await client.health().catch((e: unknown) => e)
    expect(error).toBeInstanceOf(ApiError)
    expect((error as ApiError).status).toBe(502)
  })
})
