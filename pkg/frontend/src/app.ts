// DOM glue: wires the pure render modules to the /v1 API and localStorage.
// At most one request is in flight per view; buttons disable while pending.

import { ApiClient, ApiError } from './api.js'
import { SettingsStore, type UiSettings } from './settings.js'
import { renderError, renderSimplification } from './render/simplification.js'
import {
  EMPTY_DRAFT,
  RATING_DIMENSIONS,
  draftComplete,
  renderAggregates,
  renderRatingForm,
  type RatingDraft,
} from './render/ratings.js'
import { renderEvaluation } from './render/evaluation.js'

const METRIC_CHOICES = [
  'flesch_reading_ease',
  'flesch_kincaid_grade',
  'flesch_douma',
  'smog',
  'kpc_avi',
  'spache',
]

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id)
  if (!node) throw new Error(`missing element #${id}`)
  return node as T
}

function errorMessage(error: unknown): string {
  if (error instanceof ApiError) return `${error.code}: ${error.message}`
  return error instanceof Error ? error.message : String(error)
}

export function startApp(): void {
  // Same-origin by default; a page can point elsewhere via window.ARTIST_API_BASE.
  const api = new ApiClient(window.ARTIST_API_BASE ?? '')
  const store = new SettingsStore(window.localStorage)
  let settings = store.load()
  let draft: RatingDraft = { ...EMPTY_DRAFT }
  let currentTopicId = 'adhoc'

  const backendSelect = el<HTMLSelectElement>('backend-select')
  const metricsBox = el<HTMLDivElement>('metrics-box')
  const diagnosticsToggle = el<HTMLInputElement>('diagnostics-toggle')
  const languageSelect = el<HTMLSelectElement>('language-select')
  const topKInput = el<HTMLInputElement>('topk-input')
  const sourceInput = el<HTMLTextAreaElement>('source-input')
  const simplifyButton = el<HTMLButtonElement>('simplify-button')
  const resultPanel = el<HTMLDivElement>('result-panel')
  const ratingPanel = el<HTMLDivElement>('rating-panel')
  const aggregatesPanel = el<HTMLDivElement>('aggregates-panel')
  const corpusInput = el<HTMLInputElement>('corpus-input')
  const modeSelect = el<HTMLSelectElement>('mode-select')
  const metricSelect = el<HTMLSelectElement>('eval-metric-select')
  const evaluateButton = el<HTMLButtonElement>('evaluate-button')
  const evaluationPanel = el<HTMLDivElement>('evaluation-panel')

  function persist(update: Partial<UiSettings>): void {
    settings = { ...settings, ...update }
    store.save(settings)
  }

  function renderSettings(): void {
    metricsBox.innerHTML = METRIC_CHOICES.map(
      (metric) =>
        `<label><input type="checkbox" data-metric="${metric}"` +
        `${settings.metrics.includes(metric) ? ' checked' : ''}> ${metric}</label>`,
    ).join('')
    metricsBox.querySelectorAll('input[data-metric]').forEach((node) => {
      node.addEventListener('change', () => {
        const chosen = Array.from(
          metricsBox.querySelectorAll<HTMLInputElement>('input[data-metric]:checked'),
        ).map((input) => input.dataset.metric as string)
        persist({ metrics: chosen })
      })
    })
    diagnosticsToggle.checked = settings.diagnostics
    languageSelect.value = settings.language
    topKInput.value = String(settings.topK)
  }

  async function loadBackends(): Promise<void> {
    try {
      const health = await api.health()
      const available = health.backends.map((backend) => backend.backend_id)
      settings = store.restrictToBackends(settings, available)
      store.save(settings)
      backendSelect.innerHTML = health.backends
        .map(
          (backend) =>
            `<option value="${backend.backend_id}"` +
            `${backend.backend_id === settings.backendId ? ' selected' : ''}` +
            `${backend.reachable ? '' : ' disabled'}>` +
            `${backend.backend_id}${backend.reachable ? '' : ' (unreachable)'}</option>`,
        )
        .join('')
    } catch (error) {
      resultPanel.innerHTML = renderError(`cannot load backends: ${errorMessage(error)}`)
    }
  }

  function renderRating(): void {
    ratingPanel.innerHTML = renderRatingForm(draft)
    const form = ratingPanel.querySelector<HTMLFormElement>('form')
    if (!form) return
    for (const dimension of RATING_DIMENSIONS) {
      form.querySelectorAll<HTMLInputElement>(`input[name="${dimension}"]`).forEach((input) => {
        input.addEventListener('change', () => {
          draft = { ...draft, [dimension]: Number(input.value) }
          renderRating()
        })
      })
    }
    form.addEventListener('submit', (event) => {
      event.preventDefault()
      if (!draftComplete(draft)) return
      void submitRating()
    })
  }

  async function refreshAggregates(): Promise<void> {
    try {
      const response = await api.ratings(currentTopicId, settings.backendId)
      aggregatesPanel.innerHTML = renderAggregates(response.aggregates)
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        aggregatesPanel.innerHTML = renderAggregates([])
      } else {
        aggregatesPanel.innerHTML = renderError(errorMessage(error))
      }
    }
  }

  async function submitRating(): Promise<void> {
    try {
      await api.submitRating({
        topic_id: currentTopicId,
        rater_id: 'webui',
        backend_id: settings.backendId,
        simplicity: draft.simplicity as number,
        fluency: draft.fluency as number,
        adequacy: draft.adequacy as number,
      })
      draft = { ...EMPTY_DRAFT }
      renderRating()
      await refreshAggregates()
    } catch (error) {
      aggregatesPanel.innerHTML = renderError(errorMessage(error))
    }
  }

  async function runSimplify(): Promise<void> {
    const text = sourceInput.value
    if (!text.trim()) {
      resultPanel.innerHTML = renderError('enter a text first')
      return
    }
    simplifyButton.disabled = true
    resultPanel.innerHTML = '<p class="muted">working…</p>'
    try {
      const response = await api.simplify({
        text,
        backend_id: settings.backendId,
        metrics: settings.metrics,
        diagnostics: settings.diagnostics,
      })
      resultPanel.innerHTML = renderSimplification(response)
      renderRating()
      await refreshAggregates()
    } catch (error) {
      // Input stays in the textarea; only the result pane shows the failure.
      resultPanel.innerHTML = renderError(errorMessage(error))
    } finally {
      simplifyButton.disabled = false
    }
  }

  async function runEvaluation(): Promise<void> {
    evaluateButton.disabled = true
    evaluationPanel.innerHTML = '<p class="muted">working…</p>'
    try {
      const response = await api.evaluate({
        corpus_id: corpusInput.value.trim(),
        backend_id: settings.backendId,
        metric: metricSelect.value,
        mode: modeSelect.value,
        top_k: settings.topK,
      })
      evaluationPanel.innerHTML = renderEvaluation(response)
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        evaluationPanel.innerHTML = '<p class="muted">corpus not found</p>'
      } else {
        evaluationPanel.innerHTML = renderError(errorMessage(error))
      }
    } finally {
      evaluateButton.disabled = false
    }
  }

  backendSelect.addEventListener('change', () => persist({ backendId: backendSelect.value }))
  diagnosticsToggle.addEventListener('change', () =>
    persist({ diagnostics: diagnosticsToggle.checked }),
  )
  languageSelect.addEventListener('change', () =>
    persist({ language: languageSelect.value === 'en' ? 'en' : 'nl' }),
  )
  topKInput.addEventListener('change', () => {
    const value = Number(topKInput.value)
    if (Number.isInteger(value) && value >= 1) persist({ topK: value })
  })
  simplifyButton.addEventListener('click', () => void runSimplify())
  evaluateButton.addEventListener('click', () => void runEvaluation())
  modeSelect.addEventListener('change', () => void runEvaluation())

  renderSettings()
  renderRating()
  void loadBackends()
}

declare global {
  interface Window {
    artistStartApp: () => void
    ARTIST_API_BASE?: string
  }
}

if (typeof window !== 'undefined') {
  window.artistStartApp = startApp
}
