/** Page wiring: load a layout file, calibrate the physical scale against a
 *  credit card, run a typing session and download the log. */

import { minKeyTop, renderKeyboard } from './render.js'
import { SessionRecorder } from './session.js'
import { LayoutFile, LayoutFileError, parseLayout } from './types.js'

const CREDIT_CARD_WIDTH_MM = 85.6

let layout: LayoutFile | null = null
let pxPerMm = 4.0
let recorder: SessionRecorder | null = null

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T
}

function showError(message: string): void {
  const banner = byId<HTMLDivElement>('error-banner')
  banner.textContent = message
  banner.hidden = false
  byId('keyboard').textContent = ''
}

function clearError(): void {
  byId<HTMLDivElement>('error-banner').hidden = true
}

function redraw(): void {
  if (!layout) return
  renderKeyboard(byId('keyboard'), layout, pxPerMm)
}

function refreshStatus(): void {
  const status = byId<HTMLDivElement>('live-transcript')
  if (!recorder) {
    status.textContent = ''
    return
  }
  const flag = recorder.incomplete ? ' [incomplete]' : ''
  status.textContent = recorder.transcript() + flag
}

function pointerPosMm(ev: PointerEvent): { x: number; y: number } {
  const area = byId<HTMLDivElement>('keyboard')
  const rect = area.getBoundingClientRect()
  const offset = layout ? minKeyTop(layout) : 0
  return {
    x: (ev.clientX - rect.left) / pxPerMm,
    y: (ev.clientY - rect.top) / pxPerMm + offset,
  }
}

function setupCalibration(): void {
  const slider = byId<HTMLInputElement>('ruler-width')
  const ruler = byId<HTMLDivElement>('ruler')
  const label = byId<HTMLSpanElement>('scale-label')
  const update = () => {
    const widthPx = Number(slider.value)
    ruler.style.width = `${widthPx}px`
    pxPerMm = widthPx / CREDIT_CARD_WIDTH_MM
    label.textContent = `${pxPerMm.toFixed(2)} px/mm`
    redraw()
  }
  slider.addEventListener('input', update)
  update()
}

function setupLayoutLoading(): void {
  const input = byId<HTMLInputElement>('layout-file')
  input.addEventListener('change', async () => {
    const file = input.files?.[0]
    if (!file) return
    try {
      layout = parseLayout(JSON.parse(await file.text()))
      clearError()
      redraw()
    } catch (err) {
      layout = null
      const reason = err instanceof LayoutFileError ? err.message : 'not valid JSON'
      showError(`could not load layout: ${reason}`)
    }
  })
}

function setupSession(): void {
  const area = byId<HTMLDivElement>('keyboard')
  const start = byId<HTMLButtonElement>('start-session')
  const download = byId<HTMLButtonElement>('download-log')

  start.addEventListener('click', () => {
    if (!layout) {
      showError('load a layout first')
      return
    }
    recorder = new SessionRecorder({
      layout,
      stimulus: byId<HTMLTextAreaElement>('stimulus').value,
      pxPerMm,
      subjectId: byId<HTMLInputElement>('subject-id').value,
      sessionIndex: Number(byId<HTMLInputElement>('session-index').value) || 1,
    })
    refreshStatus()
  })

  // Mouse drags act as touch surrogates on desktops.
  area.addEventListener('pointerdown', (ev) => {
    if (!recorder) return
    ev.preventDefault()
    recorder.pointerDown(ev.timeStamp, pointerPosMm(ev))
    refreshStatus()
  })
  area.addEventListener('pointerup', (ev) => {
    if (!recorder) return
    ev.preventDefault()
    recorder.pointerUp(ev.timeStamp, pointerPosMm(ev))
    refreshStatus()
  })

  download.addEventListener('click', () => {
    if (!recorder || recorder.eventCount === 0) return
    const log = recorder.toLog()
    const blob = new Blob([JSON.stringify(log, null, 2)], {
      type: 'application/json',
    })
    const a = document.createElement('a')
    a.href = URL.createObjectURL(blob)
    a.download = `session-${log.layout}-${log.session_index}.json`
    a.click()
    URL.revokeObjectURL(a.href)
  })
}

setupCalibration()
setupLayoutLoading()
setupSession()
