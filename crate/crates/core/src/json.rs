//! JSON encodings. Every scalar is a string, so no value passes through floating point.

use serde_json::{json, Map, Value};

use crate::bezforms::{CongruenceReport, TransitionMatrices};
use crate::degree::{CauchyReport, DegreeSumReport, UnstableClass};
use crate::field::Scalar;
use crate::gw::{FormInvariants, GWClass};
use crate::matrix::Matrix;

pub fn scalar<K: Scalar>(k: &K) -> Value {
    Value::String(k.to_string())
}

/// Row-major array of arrays of strings.
pub fn matrix<K: Scalar>(m: &Matrix<K>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(scalar).collect()))
            .collect(),
    )
}

pub fn gw_class<K: Scalar>(c: &GWClass<K>) -> Value {
    json!({
        "diagonal": c.diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "hyperbolics": c.hyperbolics,
        "field": c.field,
    })
}

pub fn invariants<K: Scalar>(inv: &FormInvariants<K>) -> Value {
    let mut obj = Map::new();
    obj.insert("rank".into(), json!(inv.rank));
    obj.insert("discriminant".into(), Value::String(inv.discriminant.to_string()));
    obj.insert(
        "signed_discriminant".into(),
        Value::String(inv.signed_discriminant().to_string()),
    );
    obj.insert(
        "signature".into(),
        inv.signature.map_or(Value::String("skipped".into()), |s| json!(s)),
    );
    if let Some(h) = &inv.hasse {
        let places: Map<String, Value> = h.iter().map(|(p, s)| (p.to_string(), json!(s))).collect();
        obj.insert("hasse".into(), Value::Object(places));
    }
    Value::Object(obj)
}

pub fn unstable<K: Scalar>(u: &UnstableClass<K>) -> Value {
    json!({ "w": gw_class(&u.w), "d": scalar(&u.d) })
}

pub fn transitions<K: Scalar>(t: &TransitionMatrices<K>) -> Value {
    let opt = |m: &Option<Matrix<K>>| m.as_ref().map_or(Value::Null, matrix);
    json!({
        "L": matrix(&t.l),
        "M": opt(&t.m),
        "N": opt(&t.n),
        "N0": opt(&t.n0),
    })
}

pub fn congruences(r: &CongruenceReport) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| match &c.failure {
                None => json!({ "identity": c.name, "passed": true }),
                Some((i, j, e, g)) => json!({
                    "identity": c.name,
                    "passed": false,
                    "entry": [i, j],
                    "expected": e,
                    "got": g,
                }),
            })
            .collect(),
    )
}

pub fn cauchy<K: Scalar>(c: &CauchyReport<K>) -> Value {
    json!({
        "index": c.index,
        "local": c.local.iter().map(|(r, v)| json!({ "pole": scalar(r), "index": v })).collect::<Vec<_>>(),
        "nonsplit_factor": c.nonsplit_factor.to_string(),
        "nonsplit_index": c.nonsplit_index,
    })
}

pub fn degree_sum<K: Scalar>(r: &DegreeSumReport<K>) -> Value {
    json!({
        "global": gw_class(&r.global),
        "local": r.local.iter().map(|(root, c)| json!({ "root": scalar(root), "class": gw_class(c) })).collect::<Vec<_>>(),
        "local_sum": gw_class(&r.local_sum),
        "decision": r.decision.as_str(),
    })
}
