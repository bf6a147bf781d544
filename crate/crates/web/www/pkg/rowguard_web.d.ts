/* tslint:disable */
/* eslint-disable */

export class Bound {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    beta: number;
    c1: number;
    c2: number;
    c: number;
    eta: number;
    psi: number;
}

/**
 * Projected row norms with the threshold and both masks.
 */
export class Detection {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * 1 for rows above the threshold.
     */
    discarded(): Uint8Array;
    norms(): Float64Array;
    /**
     * 1 for true outliers.
     */
    outlier(): Uint8Array;
    readonly bypassed: boolean;
    readonly estimator: string;
    readonly mu_hat: number;
    readonly precision: number;
    readonly recall: number;
    readonly s: number;
    readonly sigma_hat: number;
    readonly tau: number;
}

/**
 * Metrics of one full pipeline run against ground truth.
 */
export class RunSummary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * NaN when the approximation is rank deficient.
     */
    angle_deg: number;
    bypassed: boolean;
    n_retained: number;
    precision: number;
    recall: number;
    rel_error: number;
    s: number;
}

export function bound(epsilon: number, alpha: number, gamma: number, delta: number, c: number, max_norm: number, min_norm: number, beta: number, cross_term_two: boolean): Bound;

/**
 * Sketch and threshold a synthetic dataset. The seed is 32-bit so JS can
 * pass a plain number.
 */
export function detect(m: number, n: number, k: number, alpha: number, scale: number, epsilon: number, c: number, seed: number): Detection;

/**
 * Generate, filter and factor; report error against the clean signal.
 */
export function run(m: number, n: number, k: number, alpha: number, scale: number, epsilon: number, c: number, seed: number): RunSummary;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_bound_free: (a: number, b: number) => void;
    readonly __wbg_detection_free: (a: number, b: number) => void;
    readonly __wbg_get_bound_beta: (a: number) => number;
    readonly __wbg_get_bound_c: (a: number) => number;
    readonly __wbg_get_bound_c1: (a: number) => number;
    readonly __wbg_get_bound_c2: (a: number) => number;
    readonly __wbg_get_bound_eta: (a: number) => number;
    readonly __wbg_get_bound_psi: (a: number) => number;
    readonly __wbg_get_runsummary_angle_deg: (a: number) => number;
    readonly __wbg_get_runsummary_bypassed: (a: number) => number;
    readonly __wbg_get_runsummary_n_retained: (a: number) => number;
    readonly __wbg_get_runsummary_precision: (a: number) => number;
    readonly __wbg_get_runsummary_recall: (a: number) => number;
    readonly __wbg_get_runsummary_rel_error: (a: number) => number;
    readonly __wbg_get_runsummary_s: (a: number) => number;
    readonly __wbg_runsummary_free: (a: number, b: number) => void;
    readonly __wbg_set_bound_beta: (a: number, b: number) => void;
    readonly __wbg_set_bound_c: (a: number, b: number) => void;
    readonly __wbg_set_bound_c1: (a: number, b: number) => void;
    readonly __wbg_set_bound_c2: (a: number, b: number) => void;
    readonly __wbg_set_bound_eta: (a: number, b: number) => void;
    readonly __wbg_set_bound_psi: (a: number, b: number) => void;
    readonly __wbg_set_runsummary_angle_deg: (a: number, b: number) => void;
    readonly __wbg_set_runsummary_bypassed: (a: number, b: number) => void;
    readonly __wbg_set_runsummary_n_retained: (a: number, b: number) => void;
    readonly __wbg_set_runsummary_precision: (a: number, b: number) => void;
    readonly __wbg_set_runsummary_recall: (a: number, b: number) => void;
    readonly __wbg_set_runsummary_rel_error: (a: number, b: number) => void;
    readonly __wbg_set_runsummary_s: (a: number, b: number) => void;
    readonly bound: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
    readonly detect: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly detection_bypassed: (a: number) => number;
    readonly detection_discarded: (a: number) => [number, number];
    readonly detection_estimator: (a: number) => [number, number];
    readonly detection_mu_hat: (a: number) => number;
    readonly detection_norms: (a: number) => [number, number];
    readonly detection_outlier: (a: number) => [number, number];
    readonly detection_precision: (a: number) => number;
    readonly detection_recall: (a: number) => number;
    readonly detection_s: (a: number) => number;
    readonly detection_sigma_hat: (a: number) => number;
    readonly detection_tau: (a: number) => number;
    readonly run: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
