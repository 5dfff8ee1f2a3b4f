/* tslint:disable */
/* eslint-disable */

/**
 * One sampled curve. Gap samples hold NaN.
 */
export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Index of the smallest g², NaN samples excluded.
     */
    argmin_g2(): number | undefined;
    readonly g2: Float64Array;
    /**
     * Amplitude-equation estimate at the same samples.
     */
    readonly g2_weak: Float64Array;
    readonly n_a: Float64Array;
    readonly x: Float64Array;
}

/**
 * Weak-drive analytics at one parameter point.
 */
export class Manifold {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    c011_abs: number;
    c100_abs: number;
    c200_abs: number;
    g2_weak: number;
    omega_minus: number;
    omega_plus: number;
    splitting: number;
}

/**
 * g²(0) over log-spaced g ∈ [g_min, g_max] with Δc = −Δb.
 */
export function coupling_curve(f_a: number, delta_a: number, delta_b: number, g_min: number, g_max: number, points: number, n_a_max: number): Curve;

/**
 * g²(0) and ⟨n_a⟩ over Δa ∈ [−span, span].
 */
export function detuning_curve(g: number, f_a: number, delta_b: number, delta_c: number, span: number, points: number, n_a_max: number): Curve;

export function two_photon_manifold(delta_a: number, delta_b: number, delta_c: number, g: number, f_a: number): Manifold;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly __wbg_get_manifold_c011_abs: (a: number) => number;
    readonly __wbg_get_manifold_c100_abs: (a: number) => number;
    readonly __wbg_get_manifold_c200_abs: (a: number) => number;
    readonly __wbg_get_manifold_g2_weak: (a: number) => number;
    readonly __wbg_get_manifold_omega_minus: (a: number) => number;
    readonly __wbg_get_manifold_omega_plus: (a: number) => number;
    readonly __wbg_get_manifold_splitting: (a: number) => number;
    readonly __wbg_manifold_free: (a: number, b: number) => void;
    readonly __wbg_set_manifold_c011_abs: (a: number, b: number) => void;
    readonly __wbg_set_manifold_c100_abs: (a: number, b: number) => void;
    readonly __wbg_set_manifold_c200_abs: (a: number, b: number) => void;
    readonly __wbg_set_manifold_g2_weak: (a: number, b: number) => void;
    readonly __wbg_set_manifold_omega_minus: (a: number, b: number) => void;
    readonly __wbg_set_manifold_omega_plus: (a: number, b: number) => void;
    readonly __wbg_set_manifold_splitting: (a: number, b: number) => void;
    readonly coupling_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly curve_argmin_g2: (a: number) => number;
    readonly curve_g2: (a: number) => [number, number];
    readonly curve_g2_weak: (a: number) => [number, number];
    readonly curve_n_a: (a: number) => [number, number];
    readonly curve_x: (a: number) => [number, number];
    readonly detuning_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly two_photon_manifold: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
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
