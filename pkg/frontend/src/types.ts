/** Shared file-format types: layout files produced by the keysim library
 *  and version-1 session logs consumed by its analyze command. */

export interface ScreenFile {
  w_mm: number
  h_mm: number
}

export interface KeyFile {
  id: string
  x_mm: number
  y_mm: number
  w_mm: number
  h_mm: number
  tap?: string
  slide?: string
  multitap?: string[]
}

export interface LayoutFile {
  name: string
  kind: string
  screen: ScreenFile
  home_key: string
  keys: KeyFile[]
}

export interface LogEvent {
  t_ms: number
  phase: 'down' | 'up'
  x_px: number
  y_px: number
}

export interface SessionLogFile {
  version: 1
  layout: string
  stimulus: string
  started_at: string
  px_per_mm: number
  subject_id: string
  session_index: number
  events: LogEvent[]
}

export class LayoutFileError extends Error {}

/** Parse and sanity-check a layout file. Throws LayoutFileError with a
 *  readable message so the page can show an error banner. */
export function parseLayout(data: unknown): LayoutFile {
  if (typeof data !== 'object' || data === null) {
    throw new LayoutFileError('layout file must be a JSON object')
  }
  const obj = data as Record<string, unknown>
  for (const field of ['name', 'kind', 'screen', 'home_key', 'keys']) {
    if (!(field in obj)) throw new LayoutFileError(`missing field '${field}'`)
  }
  const screen = obj.screen as Record<string, unknown>
  if (typeof screen?.w_mm !== 'number' || typeof screen?.h_mm !== 'number') {
    throw new LayoutFileError("'screen' needs numeric w_mm and h_mm")
  }
  if (!Array.isArray(obj.keys) || obj.keys.length === 0) {
    throw new LayoutFileError("'keys' must be a non-empty array")
  }
  for (const k of obj.keys as Record<string, unknown>[]) {
    for (const field of ['id', 'x_mm', 'y_mm', 'w_mm', 'h_mm']) {
      if (!(field in k)) {
        throw new LayoutFileError(`key is missing field '${field}'`)
      }
    }
    if ((k.w_mm as number) <= 0 || (k.h_mm as number) <= 0) {
      throw new LayoutFileError(`key '${k.id}' has a non-positive size`)
    }
  }
  const layout = obj as unknown as LayoutFile
  if (!layout.keys.some((k) => k.id === layout.home_key)) {
    throw new LayoutFileError(`home key '${layout.home_key}' does not exist`)
  }
  return layout
}
