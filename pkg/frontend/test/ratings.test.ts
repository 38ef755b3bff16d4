import { describe, expect, it } from 'vitest'

import { ApiClient } from '../src/api'
import {
  EMPTY_DRAFT,
  draftComplete,
  renderAggregates,
  renderRatingForm,
} from '../src/render/ratings'
import type { RatingAggregate } from '../src/types'

// In-memory stand-in for the ratings endpoints, mirroring the service
// contract: POST stores, GET aggregates means with 1-decimal display.
function ratingsServiceStub() {
  const records: { topic_id: string; backend_id: string; simplicity: number; fluency: number; adequacy: number }[] = []
  const fetchFn = async (input: string, init?: RequestInit): Promise<Response> => {
    if (input.endsWith('/v1/ratings') && init?.method === 'POST') {
      records.push(JSON.parse(init.body as string))
      return new Response(JSON.stringify({ id: records.length }), { status: 200 })
    }
    if (input.includes('/v1/ratings?') && (init?.method ?? 'GET') === 'GET') {
      const url = new URL(input, 'http://localhost')
      const topic = url.searchParams.get('topic_id')
      const matching = records.filter((r) => r.topic_id === topic)
      if (matching.length === 0) {
        return new Response(
          JSON.stringify({ code: 'not_found', message: 'no ratings', detail: null }),
          { status: 404 },
        )
      }
      const mean = (key: 'simplicity' | 'fluency' | 'adequacy') =>
        matching.reduce((acc, r) => acc + r[key], 0) / matching.length
      const aggregate: RatingAggregate = {
        topic_id: topic as string,
        backend_id: matching[0].backend_id,
        count: matching.length,
        simplicity: mean('simplicity'),
        fluency: mean('fluency'),
        adequacy: mean('adequacy'),
        display: {
          simplicity: Math.round(mean('simplicity') * 10) / 10,
          fluency: Math.round(mean('fluency') * 10) / 10,
          adequacy: Math.round(mean('adequacy') * 10) / 10,
        },
      }
      return new Response(JSON.stringify({ aggregates: [aggregate] }), { status: 200 })
    }
    return new Response('{}', { status: 404 })
  }
  return { records, fetchFn }
}

describe('rating flow', () => {
  it('submitting (2,2,2) twice displays 2.0/2.0/2.0', async () => {
    const stub = ratingsServiceStub()
    const client = new ApiClient('', stub.fetchFn)
    for (const rater of ['r1', 'r2']) {
      await client.submitRating({
        topic_id: 'molens',
        rater_id: rater,
        backend_id: 'mock',
        simplicity: 2,
        fluency: 2,
        adequacy: 2,
      })
    }
    const response = await client.ratings('molens')
    const html = renderAggregates(response.aggregates)
    expect(html).toContain('data-testid="agg-simplicity">2.0<')
    expect(html).toContain('data-testid="agg-fluency">2.0<')
    expect(html).toContain('data-testid="agg-adequacy">2.0<')
    expect(html).toContain('<td class="num">2</td>') // two raters
  })

  it('renders aggregates to exactly one decimal', () => {
    const html = renderAggregates([
      {
        topic_id: 't',
        backend_id: 'm',
        count: 2,
        simplicity: 1.5,
        fluency: 2.0,
        adequacy: 2.5,
        display: { simplicity: 1.5, fluency: 2.0, adequacy: 2.5 },
      },
    ])
    expect(html).toContain('>1.5<')
    expect(html).toContain('>2.0<')
    expect(html).toContain('>2.5<')
  })
})

describe('rating form validation', () => {
  it('is incomplete until all three scores are set', () => {
    expect(draftComplete(EMPTY_DRAFT)).toBe(false)
    expect(draftComplete({ simplicity: 2, fluency: 2, adequacy: null })).toBe(false)
    expect(draftComplete({ simplicity: 2, fluency: 2, adequacy: 2 })).toBe(true)
  })

  it('disables submit while incomplete', () => {
    const html = renderRatingForm({ simplicity: 2, fluency: null, adequacy: null })
    expect(html).toContain('data-testid="rating-submit" disabled')
  })

  it('enables submit when complete and keeps selections checked', () => {
    const html = renderRatingForm({ simplicity: 2, fluency: 3, adequacy: 4 })
    expect(html).not.toContain('disabled')
    expect(html).toContain('name="simplicity" value="2" checked')
    expect(html).toContain('name="fluency" value="3" checked')
    expect(html).toContain('name="adequacy" value="4" checked')
  })
})
