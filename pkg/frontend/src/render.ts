/** Keyboard rendering at physical scale. The geometry helpers are pure so
 *  they can be unit-tested without a DOM. */

import type { KeyFile, LayoutFile } from './types.js'

export interface RectPx {
  left: number
  top: number
  width: number
  height: number
}

export function keyRectPx(key: KeyFile, pxPerMm: number): RectPx {
  return {
    left: key.x_mm * pxPerMm,
    top: key.y_mm * pxPerMm,
    width: key.w_mm * pxPerMm,
    height: key.h_mm * pxPerMm,
  }
}

export function keyLabel(key: KeyFile): { big: string; small: string } {
  if (key.multitap && key.multitap.length > 0) {
    return { big: key.id, small: key.multitap.join('') }
  }
  // Tap symbol big, slide symbol small above it (dual-character keys).
  const big = key.tap === ' ' ? '␣' : (key.tap ?? key.id)
  return { big, small: key.slide ?? '' }
}

/** Draw the layout into a container; returns it sized to the screen rect.
 *  Keys are positioned absolutely at bounds x pxPerMm. */
export function renderKeyboard(
  container: HTMLElement,
  layout: LayoutFile,
  pxPerMm: number,
): void {
  container.textContent = ''
  container.classList.add('keyboard')
  container.style.position = 'relative'
  container.style.width = `${layout.screen.w_mm * pxPerMm}px`
  container.style.height = `${(layout.screen.h_mm - minKeyTop(layout)) * pxPerMm}px`
  const offsetMm = minKeyTop(layout)
  for (const key of layout.keys) {
    const rect = keyRectPx(key, pxPerMm)
    const el = document.createElement('div')
    el.className = 'key'
    el.dataset.keyId = key.id
    el.style.position = 'absolute'
    el.style.left = `${rect.left}px`
    el.style.top = `${rect.top - offsetMm * pxPerMm}px`
    el.style.width = `${rect.width}px`
    el.style.height = `${rect.height}px`
    const { big, small } = keyLabel(key)
    const smallEl = document.createElement('span')
    smallEl.className = 'key-small'
    smallEl.textContent = small
    const bigEl = document.createElement('span')
    bigEl.className = 'key-big'
    bigEl.textContent = big
    el.append(smallEl, bigEl)
    container.appendChild(el)
  }
}

/** Top of the highest key, so the page can show just the keyboard area
 *  instead of the whole phone screen. */
export function minKeyTop(layout: LayoutFile): number {
  return Math.min(...layout.keys.map((k) => k.y_mm))
}
