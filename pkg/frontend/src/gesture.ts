/** Gesture classification and key hit-testing, mirroring the rules the
 *  analytics side applies when it re-transcribes an exported log. */

import type { KeyFile, LayoutFile } from './types.js'

export interface GestureConfig {
  slideThresholdMm: number
  horizontalToleranceMm: number
  multitapTimeoutMs: number
}

export const DEFAULT_GESTURE_CONFIG: GestureConfig = {
  slideThresholdMm: 4.0,
  horizontalToleranceMm: 6.0,
  multitapTimeoutMs: 1000,
}

export interface PointMm {
  x: number
  y: number
}

/** A press is a slide-up when the finger rose past the threshold without
 *  drifting too far sideways; anything else counts as a tap. */
export function classifyGesture(
  down: PointMm,
  up: PointMm,
  config: GestureConfig = DEFAULT_GESTURE_CONFIG,
): 'tap' | 'slide' {
  const rise = down.y - up.y
  const drift = Math.abs(up.x - down.x)
  return rise >= config.slideThresholdMm && drift < config.horizontalToleranceMm
    ? 'slide'
    : 'tap'
}

function contains(key: KeyFile, p: PointMm): boolean {
  return (
    p.x >= key.x_mm &&
    p.x <= key.x_mm + key.w_mm &&
    p.y >= key.y_mm &&
    p.y <= key.y_mm + key.h_mm
  )
}

/** Key under a point; boundary points go to the key whose origin is
 *  closest, ties to the lowest key id (same rule as the analytics side). */
export function hitTest(layout: LayoutFile, p: PointMm): KeyFile | null {
  if (p.x < 0 || p.y < 0 || p.x > layout.screen.w_mm || p.y > layout.screen.h_mm) {
    return null
  }
  const hits = layout.keys.filter((k) => contains(k, p))
  if (hits.length === 0) return null
  hits.sort((a, b) => {
    const da = Math.hypot(p.x - a.x_mm, p.y - a.y_mm)
    const db = Math.hypot(p.x - b.x_mm, p.y - b.y_mm)
    if (da !== db) return da - db
    return a.id < b.id ? -1 : 1
  })
  return hits[0]
}

/** Symbol a classified press on a key produces, ignoring multi-tap
 *  grouping (the recorder handles that statefully). */
export function pressSymbol(key: KeyFile, gesture: 'tap' | 'slide'): string | null {
  if (key.multitap && key.multitap.length > 0) return null
  const symbol = gesture === 'slide' ? key.slide : key.tap
  return symbol ?? null
}
