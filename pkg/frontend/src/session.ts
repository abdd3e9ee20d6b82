/** Session recording: turns raw pointer downs/ups into a live transcription
 *  and a version-1 session-log file. */

import {
  classifyGesture,
  DEFAULT_GESTURE_CONFIG,
  GestureConfig,
  hitTest,
  PointMm,
} from './gesture.js'
import type { LayoutFile, LogEvent, SessionLogFile } from './types.js'

export interface RecorderOptions {
  layout: LayoutFile
  stimulus: string
  pxPerMm: number
  subjectId?: string
  sessionIndex?: number
  config?: GestureConfig
  now?: () => string // injectable for tests
}

interface RawEvent {
  t_ms: number
  phase: 'down' | 'up'
  pos: PointMm // millimeters
}

/** Append-only recorder for one typing session.
 *
 *  Feed it pointer events in screen millimeters; it live-classifies each
 *  press with the same rules the analytics transcriber uses, so what the
 *  subject sees on screen matches what analyze will later recover. */
export class SessionRecorder {
  private readonly layout: LayoutFile
  private readonly config: GestureConfig
  private readonly events: RawEvent[] = []
  private readonly symbols: string[] = []
  private pendingDown: RawEvent | null = null

  // open multi-tap group
  private groupKeyId: string | null = null
  private groupCount = 0
  private groupLastUp = -Infinity

  readonly stimulus: string
  readonly pxPerMm: number
  readonly subjectId: string
  readonly sessionIndex: number
  readonly startedAt: string

  constructor(options: RecorderOptions) {
    this.layout = options.layout
    this.stimulus = options.stimulus
    this.pxPerMm = options.pxPerMm
    this.subjectId = options.subjectId ?? ''
    this.sessionIndex = options.sessionIndex ?? 1
    this.config = options.config ?? DEFAULT_GESTURE_CONFIG
    this.startedAt = (options.now ?? (() => new Date().toISOString()))()
  }

  pointerDown(tMs: number, pos: PointMm): void {
    if (this.pendingDown) return // ignore secondary touches
    const ev: RawEvent = { t_ms: tMs, phase: 'down', pos }
    this.pendingDown = ev
    this.events.push(ev)
  }

  pointerUp(tMs: number, pos: PointMm): void {
    if (!this.pendingDown) return
    const down = this.pendingDown
    this.pendingDown = null
    this.events.push({ t_ms: Math.max(tMs, down.t_ms), phase: 'up', pos })
    this.applyPress(down, { t_ms: tMs, phase: 'up', pos })
  }

  private flushGroup(): void {
    if (this.groupKeyId !== null) {
      const key = this.layout.keys.find((k) => k.id === this.groupKeyId)
      const group = key?.multitap ?? []
      if (group.length > 0) {
        this.symbols.push(group[(this.groupCount - 1) % group.length])
      }
    }
    this.groupKeyId = null
    this.groupCount = 0
  }

  private applyPress(down: RawEvent, up: RawEvent): void {
    const key = hitTest(this.layout, down.pos)
    if (!key) {
      this.flushGroup()
      return
    }
    if (key.multitap && key.multitap.length > 0) {
      const withinTimeout = down.t_ms - this.groupLastUp <= this.config.multitapTimeoutMs
      if (this.groupKeyId === key.id && withinTimeout) {
        this.groupCount += 1
      } else {
        this.flushGroup()
        this.groupKeyId = key.id
        this.groupCount = 1
      }
      this.groupLastUp = up.t_ms
      return
    }
    this.flushGroup()
    const gesture = classifyGesture(down.pos, up.pos, this.config)
    const symbol = gesture === 'slide' ? key.slide : key.tap
    if (symbol !== undefined && symbol !== null) this.symbols.push(symbol)
  }

  /** Live transcription, including the still-open multi-tap group. */
  transcript(): string {
    let tail = ''
    if (this.groupKeyId !== null) {
      const key = this.layout.keys.find((k) => k.id === this.groupKeyId)
      const group = key?.multitap ?? []
      if (group.length > 0) tail = group[(this.groupCount - 1) % group.length]
    }
    return this.symbols.join('') + tail
  }

  /** True when a finger is currently down; such a session exports without
   *  the unmatched trailing event and should be flagged in the UI. */
  get incomplete(): boolean {
    return this.pendingDown !== null
  }

  get eventCount(): number {
    return this.events.length
  }

  /** Export as a version-1 session log. Timestamps are rebased to the
   *  first event; an unmatched trailing down is dropped so the file always
   *  satisfies the format's alternation invariant. */
  toLog(): SessionLogFile {
    const complete = this.pendingDown
      ? this.events.slice(0, this.events.length - 1)
      : this.events.slice()
    const base = complete.length > 0 ? complete[0].t_ms : 0
    const round3 = (v: number) => Math.round(v * 1000) / 1000
    const events: LogEvent[] = complete.map((ev) => ({
      t_ms: round3(ev.t_ms - base),
      phase: ev.phase,
      x_px: round3(ev.pos.x * this.pxPerMm),
      y_px: round3(ev.pos.y * this.pxPerMm),
    }))
    return {
      version: 1,
      layout: this.layout.name,
      stimulus: this.stimulus,
      started_at: this.startedAt,
      px_per_mm: this.pxPerMm,
      subject_id: this.subjectId,
      session_index: this.sessionIndex,
      events,
    }
  }
}
