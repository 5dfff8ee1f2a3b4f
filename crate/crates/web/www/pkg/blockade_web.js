/* @ts-self-types="./blockade_web.d.ts" */

/**
 * One sampled curve. Gap samples hold NaN.
 */
export class Curve {
    static __wrap(ptr) {
        const obj = Object.create(Curve.prototype);
        obj.__wbg_ptr = ptr;
        CurveFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        CurveFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_curve_free(ptr, 0);
    }
    /**
     * Index of the smallest g², NaN samples excluded.
     * @returns {number | undefined}
     */
    argmin_g2() {
        const ret = wasm.curve_argmin_g2(this.__wbg_ptr);
        return ret === Number.MAX_SAFE_INTEGER ? undefined : ret;
    }
    /**
     * @returns {Float64Array}
     */
    get g2() {
        const ret = wasm.curve_g2(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * Amplitude-equation estimate at the same samples.
     * @returns {Float64Array}
     */
    get g2_weak() {
        const ret = wasm.curve_g2_weak(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get n_a() {
        const ret = wasm.curve_n_a(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get x() {
        const ret = wasm.curve_x(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) Curve.prototype[Symbol.dispose] = Curve.prototype.free;

/**
 * Weak-drive analytics at one parameter point.
 */
export class Manifold {
    static __wrap(ptr) {
        const obj = Object.create(Manifold.prototype);
        obj.__wbg_ptr = ptr;
        ManifoldFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        ManifoldFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_manifold_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get c011_abs() {
        const ret = wasm.__wbg_get_manifold_c011_abs(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get c100_abs() {
        const ret = wasm.__wbg_get_manifold_c100_abs(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get c200_abs() {
        const ret = wasm.__wbg_get_manifold_c200_abs(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get g2_weak() {
        const ret = wasm.__wbg_get_manifold_g2_weak(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get omega_minus() {
        const ret = wasm.__wbg_get_manifold_omega_minus(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get omega_plus() {
        const ret = wasm.__wbg_get_manifold_omega_plus(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get splitting() {
        const ret = wasm.__wbg_get_manifold_splitting(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set c011_abs(arg0) {
        wasm.__wbg_set_manifold_c011_abs(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set c100_abs(arg0) {
        wasm.__wbg_set_manifold_c100_abs(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set c200_abs(arg0) {
        wasm.__wbg_set_manifold_c200_abs(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set g2_weak(arg0) {
        wasm.__wbg_set_manifold_g2_weak(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set omega_minus(arg0) {
        wasm.__wbg_set_manifold_omega_minus(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set omega_plus(arg0) {
        wasm.__wbg_set_manifold_omega_plus(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set splitting(arg0) {
        wasm.__wbg_set_manifold_splitting(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Manifold.prototype[Symbol.dispose] = Manifold.prototype.free;

/**
 * g²(0) over log-spaced g ∈ [g_min, g_max] with Δc = −Δb.
 * @param {number} f_a
 * @param {number} delta_a
 * @param {number} delta_b
 * @param {number} g_min
 * @param {number} g_max
 * @param {number} points
 * @param {number} n_a_max
 * @returns {Curve}
 */
export function coupling_curve(f_a, delta_a, delta_b, g_min, g_max, points, n_a_max) {
    const ret = wasm.coupling_curve(f_a, delta_a, delta_b, g_min, g_max, points, n_a_max);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Curve.__wrap(ret[0]);
}

/**
 * g²(0) and ⟨n_a⟩ over Δa ∈ [−span, span].
 * @param {number} g
 * @param {number} f_a
 * @param {number} delta_b
 * @param {number} delta_c
 * @param {number} span
 * @param {number} points
 * @param {number} n_a_max
 * @returns {Curve}
 */
export function detuning_curve(g, f_a, delta_b, delta_c, span, points, n_a_max) {
    const ret = wasm.detuning_curve(g, f_a, delta_b, delta_c, span, points, n_a_max);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Curve.__wrap(ret[0]);
}

/**
 * @param {number} delta_a
 * @param {number} delta_b
 * @param {number} delta_c
 * @param {number} g
 * @param {number} f_a
 * @returns {Manifold}
 */
export function two_photon_manifold(delta_a, delta_b, delta_c, g, f_a) {
    const ret = wasm.two_photon_manifold(delta_a, delta_b, delta_c, g, f_a);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Manifold.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_92b29b0548f8b746: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_344f42d3211c4765: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./blockade_web_bg.js": import0,
    };
}

const CurveFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_curve_free(ptr, 1));
const ManifoldFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_manifold_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = module.ok && expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('blockade_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
