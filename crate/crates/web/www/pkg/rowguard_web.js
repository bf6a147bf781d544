/* @ts-self-types="./rowguard_web.d.ts" */

export class Bound {
    static __wrap(ptr) {
        const obj = Object.create(Bound.prototype);
        obj.__wbg_ptr = ptr;
        BoundFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        BoundFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_bound_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get beta() {
        const ret = wasm.__wbg_get_bound_beta(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get c1() {
        const ret = wasm.__wbg_get_bound_c1(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get c2() {
        const ret = wasm.__wbg_get_bound_c2(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get c() {
        const ret = wasm.__wbg_get_bound_c(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get eta() {
        const ret = wasm.__wbg_get_bound_eta(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get psi() {
        const ret = wasm.__wbg_get_bound_psi(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set beta(arg0) {
        wasm.__wbg_set_bound_beta(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set c1(arg0) {
        wasm.__wbg_set_bound_c1(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set c2(arg0) {
        wasm.__wbg_set_bound_c2(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set c(arg0) {
        wasm.__wbg_set_bound_c(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set eta(arg0) {
        wasm.__wbg_set_bound_eta(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set psi(arg0) {
        wasm.__wbg_set_bound_psi(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Bound.prototype[Symbol.dispose] = Bound.prototype.free;

/**
 * Projected row norms with the threshold and both masks.
 */
export class Detection {
    static __wrap(ptr) {
        const obj = Object.create(Detection.prototype);
        obj.__wbg_ptr = ptr;
        DetectionFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        DetectionFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_detection_free(ptr, 0);
    }
    /**
     * @returns {boolean}
     */
    get bypassed() {
        const ret = wasm.detection_bypassed(this.__wbg_ptr);
        return ret !== 0;
    }
    /**
     * 1 for rows above the threshold.
     * @returns {Uint8Array}
     */
    discarded() {
        const ret = wasm.detection_discarded(this.__wbg_ptr);
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * @returns {string}
     */
    get estimator() {
        let deferred1_0;
        let deferred1_1;
        try {
            const ret = wasm.detection_estimator(this.__wbg_ptr);
            deferred1_0 = ret[0];
            deferred1_1 = ret[1];
            return getStringFromWasm0(ret[0], ret[1]);
        } finally {
            wasm.__wbindgen_free(deferred1_0, deferred1_1, 1);
        }
    }
    /**
     * @returns {number}
     */
    get mu_hat() {
        const ret = wasm.detection_mu_hat(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    norms() {
        const ret = wasm.detection_norms(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * 1 for true outliers.
     * @returns {Uint8Array}
     */
    outlier() {
        const ret = wasm.detection_outlier(this.__wbg_ptr);
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * @returns {number}
     */
    get precision() {
        const ret = wasm.detection_precision(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get recall() {
        const ret = wasm.detection_recall(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get s() {
        const ret = wasm.detection_s(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get sigma_hat() {
        const ret = wasm.detection_sigma_hat(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get tau() {
        const ret = wasm.detection_tau(this.__wbg_ptr);
        return ret;
    }
}
if (Symbol.dispose) Detection.prototype[Symbol.dispose] = Detection.prototype.free;

/**
 * Metrics of one full pipeline run against ground truth.
 */
export class RunSummary {
    static __wrap(ptr) {
        const obj = Object.create(RunSummary.prototype);
        obj.__wbg_ptr = ptr;
        RunSummaryFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        RunSummaryFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_runsummary_free(ptr, 0);
    }
    /**
     * NaN when the approximation is rank deficient.
     * @returns {number}
     */
    get angle_deg() {
        const ret = wasm.__wbg_get_runsummary_angle_deg(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {boolean}
     */
    get bypassed() {
        const ret = wasm.__wbg_get_runsummary_bypassed(this.__wbg_ptr);
        return ret !== 0;
    }
    /**
     * @returns {number}
     */
    get n_retained() {
        const ret = wasm.__wbg_get_runsummary_n_retained(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get precision() {
        const ret = wasm.__wbg_get_runsummary_precision(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get recall() {
        const ret = wasm.__wbg_get_runsummary_recall(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get rel_error() {
        const ret = wasm.__wbg_get_runsummary_rel_error(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get s() {
        const ret = wasm.__wbg_get_runsummary_s(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * NaN when the approximation is rank deficient.
     * @param {number} arg0
     */
    set angle_deg(arg0) {
        wasm.__wbg_set_runsummary_angle_deg(this.__wbg_ptr, arg0);
    }
    /**
     * @param {boolean} arg0
     */
    set bypassed(arg0) {
        wasm.__wbg_set_runsummary_bypassed(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set n_retained(arg0) {
        wasm.__wbg_set_runsummary_n_retained(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set precision(arg0) {
        wasm.__wbg_set_runsummary_precision(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set recall(arg0) {
        wasm.__wbg_set_runsummary_recall(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set rel_error(arg0) {
        wasm.__wbg_set_runsummary_rel_error(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set s(arg0) {
        wasm.__wbg_set_runsummary_s(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) RunSummary.prototype[Symbol.dispose] = RunSummary.prototype.free;

/**
 * @param {number} epsilon
 * @param {number} alpha
 * @param {number} gamma
 * @param {number} delta
 * @param {number} c
 * @param {number} max_norm
 * @param {number} min_norm
 * @param {number} beta
 * @param {boolean} cross_term_two
 * @returns {Bound}
 */
export function bound(epsilon, alpha, gamma, delta, c, max_norm, min_norm, beta, cross_term_two) {
    const ret = wasm.bound(epsilon, alpha, gamma, delta, c, max_norm, min_norm, beta, cross_term_two);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Bound.__wrap(ret[0]);
}

/**
 * Sketch and threshold a synthetic dataset. The seed is 32-bit so JS can
 * pass a plain number.
 * @param {number} m
 * @param {number} n
 * @param {number} k
 * @param {number} alpha
 * @param {number} scale
 * @param {number} epsilon
 * @param {number} c
 * @param {number} seed
 * @returns {Detection}
 */
export function detect(m, n, k, alpha, scale, epsilon, c, seed) {
    const ret = wasm.detect(m, n, k, alpha, scale, epsilon, c, seed);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Detection.__wrap(ret[0]);
}

/**
 * Generate, filter and factor; report error against the clean signal.
 * @param {number} m
 * @param {number} n
 * @param {number} k
 * @param {number} alpha
 * @param {number} scale
 * @param {number} epsilon
 * @param {number} c
 * @param {number} seed
 * @returns {RunSummary}
 */
export function run(m, n, k, alpha, scale, epsilon, c, seed) {
    const ret = wasm.run(m, n, k, alpha, scale, epsilon, c, seed);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return RunSummary.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
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
        "./rowguard_web_bg.js": import0,
    };
}

const BoundFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_bound_free(ptr, 1));
const DetectionFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_detection_free(ptr, 1));
const RunSummaryFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_runsummary_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

function getArrayU8FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getUint8ArrayMemory0().subarray(ptr / 1, ptr / 1 + len);
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
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

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
        module_or_path = new URL('rowguard_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
