/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_bound_free: (a: number, b: number) => void;
export const __wbg_detection_free: (a: number, b: number) => void;
export const __wbg_get_bound_beta: (a: number) => number;
export const __wbg_get_bound_c: (a: number) => number;
export const __wbg_get_bound_c1: (a: number) => number;
export const __wbg_get_bound_c2: (a: number) => number;
export const __wbg_get_bound_eta: (a: number) => number;
export const __wbg_get_bound_psi: (a: number) => number;
export const __wbg_get_runsummary_angle_deg: (a: number) => number;
export const __wbg_get_runsummary_bypassed: (a: number) => number;
export const __wbg_get_runsummary_n_retained: (a: number) => number;
export const __wbg_get_runsummary_precision: (a: number) => number;
export const __wbg_get_runsummary_recall: (a: number) => number;
export const __wbg_get_runsummary_rel_error: (a: number) => number;
export const __wbg_get_runsummary_s: (a: number) => number;
export const __wbg_runsummary_free: (a: number, b: number) => void;
export const __wbg_set_bound_beta: (a: number, b: number) => void;
export const __wbg_set_bound_c: (a: number, b: number) => void;
export const __wbg_set_bound_c1: (a: number, b: number) => void;
export const __wbg_set_bound_c2: (a: number, b: number) => void;
export const __wbg_set_bound_eta: (a: number, b: number) => void;
export const __wbg_set_bound_psi: (a: number, b: number) => void;
export const __wbg_set_runsummary_angle_deg: (a: number, b: number) => void;
export const __wbg_set_runsummary_bypassed: (a: number, b: number) => void;
export const __wbg_set_runsummary_n_retained: (a: number, b: number) => void;
export const __wbg_set_runsummary_precision: (a: number, b: number) => void;
export const __wbg_set_runsummary_recall: (a: number, b: number) => void;
export const __wbg_set_runsummary_rel_error: (a: number, b: number) => void;
export const __wbg_set_runsummary_s: (a: number, b: number) => void;
export const bound: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
export const detect: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const detection_bypassed: (a: number) => number;
export const detection_discarded: (a: number) => [number, number];
export const detection_estimator: (a: number) => [number, number];
export const detection_mu_hat: (a: number) => number;
export const detection_norms: (a: number) => [number, number];
export const detection_outlier: (a: number) => [number, number];
export const detection_precision: (a: number) => number;
export const detection_recall: (a: number) => number;
export const detection_s: (a: number) => number;
export const detection_sigma_hat: (a: number) => number;
export const detection_tau: (a: number) => number;
export const run: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
