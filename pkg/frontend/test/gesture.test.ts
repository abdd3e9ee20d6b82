import { readFileSync } from 'node:fs'
import { describe, expect, it } from 'vitest'

import { classifyGesture, hitTest, pressSymbol } from '../src/gesture.js'
import { parseLayout } from '../src/types.js'

const qwert = parseLayout(
  JSON.parse(readFileSync(new URL('../fixtures/qwert.layout.json', import.meta.url), 'utf-8')),
)

function center(id: string) {
  const k = qwert.keys.find((k) => k.id === id)!
  return { x: k.x_mm + k.w_mm / 2, y: k.y_mm + k.h_mm / 2 }
}

describe('classifyGesture', () => {
  it('treats a stationary press as a tap', () => {
    const p = { x: 10, y: 50 }
    expect(classifyGesture(p, p)).toBe('tap')
  })

  it('classifies a 6 mm rise as a slide', () => {
    const down = { x: 10, y: 50 }
    expect(classifyGesture(down, { x: 10, y: 44 })).toBe('slide')
  })

  it('keeps a 2 mm rise a tap', () => {
    const down = { x: 10, y: 50 }
    expect(classifyGesture(down, { x: 10, y: 48 })).toBe('tap')
  })

  it('rejects slides with too much sideways drift', () => {
    const down = { x: 10, y: 50 }
    expect(classifyGesture(down, { x: 17, y: 44 })).toBe('tap')
  })

  it('ignores downward movement', () => {
    const down = { x: 10, y: 50 }
    expect(classifyGesture(down, { x: 10, y: 56 })).toBe('tap')
  })
})

describe('hitTest', () => {
  it('finds every key at its center', () => {
    for (const k of qwert.keys) {
      expect(hitTest(qwert, center(k.id))?.id).toBe(k.id)
    }
  })

  it('returns null between keys and off screen', () => {
    const q = qwert.keys.find((k) => k.id === 'q')!
    expect(hitTest(qwert, { x: q.x_mm + q.w_mm + 0.5, y: q.y_mm + 1 })).toBeNull()
    expect(hitTest(qwert, { x: -3, y: -3 })).toBeNull()
  })
})

describe('pressSymbol', () => {
  it('maps tap and slide to the dual bindings', () => {
    const q = qwert.keys.find((k) => k.id === 'q')!
    expect(pressSymbol(q, 'tap')).toBe('q')
    expect(pressSymbol(q, 'slide')).toBe('y')
  })

  it('returns null for unbound gestures', () => {
    const enter = qwert.keys.find((k) => k.id === 'enter')!
    expect(pressSymbol(enter, 'tap')).toBeNull()
    const g = qwert.keys.find((k) => k.id === 'g')!
    expect(pressSymbol(g, 'slide')).toBeNull()
  })
})
