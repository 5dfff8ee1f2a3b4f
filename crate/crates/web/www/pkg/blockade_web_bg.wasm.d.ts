/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curve_free: (a: number, b: number) => void;
export const __wbg_get_manifold_c011_abs: (a: number) => number;
export const __wbg_get_manifold_c100_abs: (a: number) => number;
export const __wbg_get_manifold_c200_abs: (a: number) => number;
export const __wbg_get_manifold_g2_weak: (a: number) => number;
export const __wbg_get_manifold_omega_minus: (a: number) => number;
export const __wbg_get_manifold_omega_plus: (a: number) => number;
export const __wbg_get_manifold_splitting: (a: number) => number;
export const __wbg_manifold_free: (a: number, b: number) => void;
export const __wbg_set_manifold_c011_abs: (a: number, b: number) => void;
export const __wbg_set_manifold_c100_abs: (a: number, b: number) => void;
export const __wbg_set_manifold_c200_abs: (a: number, b: number) => void;
export const __wbg_set_manifold_g2_weak: (a: number, b: number) => void;
export const __wbg_set_manifold_omega_minus: (a: number, b: number) => void;
export const __wbg_set_manifold_omega_plus: (a: number, b: number) => void;
export const __wbg_set_manifold_splitting: (a: number, b: number) => void;
export const coupling_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const curve_argmin_g2: (a: number) => number;
export const curve_g2: (a: number) => [number, number];
export const curve_g2_weak: (a: number) => [number, number];
export const curve_n_a: (a: number) => [number, number];
export const curve_x: (a: number) => [number, number];
export const detuning_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const two_photon_manifold: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
