//! wasm-bindgen bindings for the browser demo: vertex evaluation, path
//! building and lattice export as JSON strings consumed by the static page
//! in `www/`. The logic lives in string-based functions so it can also be
//! exercised by native tests; the exported wrappers only translate errors
//! into `JsValue` at the boundary.

use wasm_bindgen::prelude::*;

use ssn_core::{
    em1_path, em1_vertex, em2_path, em2_vertex, em3_path, em3_surgery_description, em3_vertex,
    export_graph, torus_reducible_surgery, ExtendedRational, GraphFamily, GraphFormat, GraphSpec,
    ParamRange,
};

mod api {
    use super::*;

    fn rat(s: &str) -> Result<ExtendedRational, String> {
        s.parse().map_err(|e: ssn_core::Error| e.to_string())
    }

    fn pretty(v: serde_json::Value) -> String {
        serde_json::to_string_pretty(&v).unwrap()
    }

    pub fn em1_vertex_json(l: i32, n: i32, p: i32, minus_one: bool) -> Result<String, String> {
        let r = em1_vertex(l.into(), n.into(), p.into(), minus_one).map_err(|e| e.to_string())?;
        Ok(pretty(r.to_json()))
    }

    pub fn em2_vertex_json(
        l: i32,
        m: i32,
        n: i32,
        p: i32,
        minus_one: bool,
    ) -> Result<String, String> {
        let r = em2_vertex(l.into(), m.into(), n.into(), p.into(), minus_one)
            .map_err(|e| e.to_string())?;
        Ok(pretty(r.to_json()))
    }

    pub fn em3_vertex_json(a1: &str, a2: &str, a3: &str) -> Result<String, String> {
        let (a1, a2, a3) = (rat(a1)?, rat(a2)?, rat(a3)?);
        let r = em3_vertex(&a1, &a2, &a3).map_err(|e| e.to_string())?;
        let d = em3_surgery_description(&a1, &a2, &a3).map_err(|e| e.to_string())?;
        let mut v = r.to_json();
        v.as_object_mut().unwrap().insert("surgery_description".into(), d.to_json());
        Ok(pretty(v))
    }

    pub fn torus_vertex_json(p: i32, q: i32) -> Result<String, String> {
        let r = torus_reducible_surgery(p.into(), q.into()).map_err(|e| e.to_string())?;
        Ok(pretty(r.to_json()))
    }

    pub fn em1_path_json(l: i32, n: i32, p: i32, minus_one: bool) -> Result<String, String> {
        let r = em1_path(l.into(), n.into(), p.into(), minus_one).map_err(|e| e.to_string())?;
        Ok(pretty(r.to_json()))
    }

    pub fn em2_path_json(
        l: i32,
        m: i32,
        n: i32,
        p: i32,
        minus_one: bool,
    ) -> Result<String, String> {
        let r = em2_path(l.into(), m.into(), n.into(), p.into(), minus_one)
            .map_err(|e| e.to_string())?;
        Ok(pretty(r.to_json()))
    }

    pub fn em3_path_json(a1: &str, a2: &str, a3: &str) -> Result<String, String> {
        let r = em3_path(&rat(a1)?, &rat(a2)?, &rat(a3)?).map_err(|e| e.to_string())?;
        Ok(pretty(r.to_json()))
    }

    #[allow(clippy::too_many_arguments)]
    pub fn graph_json(
        family: &str,
        l_lo: i32,
        l_hi: i32,
        m_lo: i32,
        m_hi: i32,
        n_lo: i32,
        n_hi: i32,
        p_lo: i32,
        p_hi: i32,
        minus_one: bool,
    ) -> Result<String, String> {
        let family = match family {
            "em1" => GraphFamily::Em1,
            "em2" => GraphFamily::Em2,
            other => return Err(format!("unknown graph family {other:?}")),
        };
        let spec = GraphSpec {
            family,
            l: ParamRange::new(l_lo.into(), l_hi.into()),
            m: ParamRange::new(m_lo.into(), m_hi.into()),
            n: ParamRange::new(n_lo.into(), n_hi.into()),
            p: ParamRange::new(p_lo.into(), p_hi.into()),
            minus_one,
        };
        export_graph(&spec, GraphFormat::Json).map_err(|e| e.to_string())
    }
}

fn to_js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn em1_vertex_json(l: i32, n: i32, p: i32, minus_one: bool) -> Result<String, JsValue> {
    to_js(api::em1_vertex_json(l, n, p, minus_one))
}

#[wasm_bindgen]
pub fn em2_vertex_json(l: i32, m: i32, n: i32, p: i32, minus_one: bool) -> Result<String, JsValue> {
    to_js(api::em2_vertex_json(l, m, n, p, minus_one))
}

#[wasm_bindgen]
pub fn em3_vertex_json(a1: &str, a2: &str, a3: &str) -> Result<String, JsValue> {
    to_js(api::em3_vertex_json(a1, a2, a3))
}

#[wasm_bindgen]
pub fn torus_vertex_json(p: i32, q: i32) -> Result<String, JsValue> {
    to_js(api::torus_vertex_json(p, q))
}

#[wasm_bindgen]
pub fn em1_path_json(l: i32, n: i32, p: i32, minus_one: bool) -> Result<String, JsValue> {
    to_js(api::em1_path_json(l, n, p, minus_one))
}

#[wasm_bindgen]
pub fn em2_path_json(l: i32, m: i32, n: i32, p: i32, minus_one: bool) -> Result<String, JsValue> {
    to_js(api::em2_path_json(l, m, n, p, minus_one))
}

#[wasm_bindgen]
pub fn em3_path_json(a1: &str, a2: &str, a3: &str) -> Result<String, JsValue> {
    to_js(api::em3_path_json(a1, a2, a3))
}

#[allow(clippy::too_many_arguments)]
#[wasm_bindgen]
pub fn graph_json(
    family: &str,
    l_lo: i32,
    l_hi: i32,
    m_lo: i32,
    m_hi: i32,
    n_lo: i32,
    n_hi: i32,
    p_lo: i32,
    p_hi: i32,
    minus_one: bool,
) -> Result<String, JsValue> {
    to_js(api::graph_json(family, l_lo, l_hi, m_lo, m_hi, n_lo, n_hi, p_lo, p_hi, minus_one))
}
