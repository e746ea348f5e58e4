/* tslint:disable */
/* eslint-disable */

/**
 * Plants a synthetic panel, fits the consensus model and compares.
 */
export function cct_recovery(n_sources: number, n_names: number, lo: number, hi: number, seed: number): string;

/**
 * Classifies `name` against the bundled fixture, optionally restricted to
 * comma-separated country codes.
 */
export function classify_name(name: string, countries: string, band: number): string;

/**
 * Entropy curve on `steps + 1` points of [0, 1] and the strength at which
 * the entropy falls to `threshold` bits.
 */
export function entropy_curve(threshold: number, steps: number): string;

/**
 * Number of names in the bundled fixture.
 */
export function fixture_size(): number;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly cct_recovery: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly classify_name: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly entropy_curve: (a: number, b: number) => [number, number];
    readonly fixture_size: () => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
