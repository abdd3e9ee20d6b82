import { readFileSync } from 'node:fs'
import { describe, expect, it } from 'vitest'

import { SessionRecorder } from '../src/session.js'
import { parseLayout, LayoutFile } from '../src/types.js'

const qwert = parseLayout(
  JSON.parse(readFileSync(new URL('../fixtures/qwert.layout.json', import.meta.url), 'utf-8')),
)

function center(layout: LayoutFile, id: string) {
  const k = layout.keys.find((k) => k.id === id)!
  return { x: k.x_mm + k.w_mm / 2, y: k.y_mm + k.h_mm / 2 }
}

function recorder(layout: LayoutFile = qwert, stimulus = '') {
  return new SessionRecorder({
    layout,
    stimulus,
    pxPerMm: 10,
    subjectId: 'test',
    now: () => '2026-01-01T00:00:00Z',
  })
}

function tap(rec: SessionRecorder, layout: LayoutFile, id: string, t: number) {
  const c = center(layout, id)
  rec.pointerDown(t, c)
  rec.pointerUp(t + 80, c)
}

function slide(rec: SessionRecorder, layout: LayoutFile, id: string, t: number, riseMm = 6) {
  const c = center(layout, id)
  rec.pointerDown(t, c)
  rec.pointerUp(t + 120, { x: c.x, y: c.y - riseMm })
}

describe('SessionRecorder live transcription', () => {
  it('transcribes taps', () => {
    const rec = recorder()
    tap(rec, qwert, 'q', 0)
    expect(rec.transcript()).toBe('q')
  })

  it('transcribes a 6 mm upward drag as the slide symbol', () => {
    const rec = recorder()
    slide(rec, qwert, 'q', 0, 6)
    expect(rec.transcript()).toBe('y')
  })

  it('keeps a 2 mm drag as the tap symbol', () => {
    const rec = recorder()
    slide(rec, qwert, 'q', 0, 2)
    expect(rec.transcript()).toBe('q')
  })

  it('spells hey from scripted presses', () => {
    const rec = recorder(qwert, 'hey')
    slide(rec, qwert, 'a', 0) // h
    tap(rec, qwert, 'e', 500)
    slide(rec, qwert, 'q', 1000) // y
    expect(rec.transcript()).toBe('hey')
  })

  it('produces nothing for unbound keys', () => {
    const rec = recorder()
    tap(rec, qwert, 'enter', 0) // enter has no tap binding
    slide(rec, qwert, 'g', 500) // g has no slide binding
    expect(rec.transcript()).toBe('')
  })
})

describe('multi-tap grouping', () => {
  const threeByFour: LayoutFile = {
    name: '3x4',
    kind: '3x4',
    screen: { w_mm: 54, h_mm: 94 },
    home_key: '0',
    keys: [
      { id: '2', x_mm: 18, y_mm: 34, w_mm: 18, h_mm: 15, multitap: ['a', 'b', 'c'] },
      { id: '3', x_mm: 36, y_mm: 34, w_mm: 18, h_mm: 15, multitap: ['d', 'e', 'f'] },
      { id: '0', x_mm: 18, y_mm: 79, w_mm: 18, h_mm: 15, tap: ' ' },
    ],
  }

  it('cycles letters within the timeout', () => {
    const rec = recorder(threeByFour)
    tap(rec, threeByFour, '2', 0)
    tap(rec, threeByFour, '2', 300)
    expect(rec.transcript()).toBe('b')
  })

  it('splits groups after the timeout', () => {
    const rec = recorder(threeByFour)
    tap(rec, threeByFour, '2', 0)
    tap(rec, threeByFour, '2', 1500)
    expect(rec.transcript()).toBe('aa')
  })

  it('commits the group when another key is pressed', () => {
    const rec = recorder(threeByFour)
    tap(rec, threeByFour, '2', 0)
    tap(rec, threeByFour, '3', 300)
    tap(rec, threeByFour, '3', 500)
    expect(rec.transcript()).toBe('ae')
  })
})

describe('log export', () => {
  it('emits a well-formed version-1 log', () => {
    const rec = recorder(qwert, 'hey')
    slide(rec, qwert, 'a', 100)
    tap(rec, qwert, 'e', 600)
    slide(rec, qwert, 'q', 1100)
    const log = rec.toLog()
    expect(log.version).toBe(1)
    expect(log.layout).toBe('qwert')
    expect(log.stimulus).toBe('hey')
    expect(log.events).toHaveLength(6)
    expect(log.events[0].t_ms).toBe(0) // rebased to the first event
    for (let i = 0; i < log.events.length; i++) {
      expect(log.events[i].phase).toBe(i % 2 === 0 ? 'down' : 'up')
      if (i > 0) expect(log.events[i].t_ms).toBeGreaterThanOrEqual(log.events[i - 1].t_ms)
    }
  })

  it('drops an unmatched trailing down and flags the session incomplete', () => {
    const rec = recorder()
    tap(rec, qwert, 'q', 0)
    rec.pointerDown(500, center(qwert, 'w'))
    expect(rec.incomplete).toBe(true)
    const log = rec.toLog()
    expect(log.events).toHaveLength(2)
    expect(log.events[log.events.length - 1].phase).toBe('up')
  })

  it('scales positions by px_per_mm', () => {
    const rec = recorder()
    tap(rec, qwert, 'q', 0)
    const c = center(qwert, 'q')
    const log = rec.toLog()
    expect(log.events[0].x_px).toBeCloseTo(c.x * 10, 3)
    expect(log.events[0].y_px).toBeCloseTo(c.y * 10, 3)
  })
})
