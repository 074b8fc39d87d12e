//! JSON encoding of algebras, exterior elements, subspaces and endomorphisms.
//!
//! Scalars are strings `"p"` or `"p/q"`; complex scalars are `{"re": …, "im": …}`.
//! Elements are `{"space": "form"|"vector", "terms": [{"mono": [labels], "coeff": …}]}`
//! and subspaces are `{"field": "Q"|"C", "generators": [elements]}`. Serialization is
//! canonical: terms in monomial order, subspaces by their echelon basis, keys sorted.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exterior::{BasedSpace, Exterior, Form, Monomial, Multivector, Side};
use crate::lie::LieAlgebra;
use crate::linalg::{Field, Subspace, Vector};
use crate::omni::{OmniSubspace, OmniVector};
use crate::scalar::{format_rational, parse_rational, Gauss, Rational};

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    parse_json_text(&text).map_err(|e| e.at(&path.display().to_string()))
}

pub fn parse_json_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

fn obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::parse("", format!("expected {what} object")))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    o.get(key)
        .ok_or_else(|| Error::parse("", format!("missing key {key:?}")))
}

fn arr<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::parse(key, "expected an array"))
}

fn string<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::parse(key, "expected a string"))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        other => Err(Error::parse(
            "",
            format!("rationals must be strings, found {other}"),
        )),
    }
}

pub fn gauss_to_json(c: &Gauss) -> Value {
    json!({ "re": rational_to_json(&c.re), "im": rational_to_json(&c.im) })
}

/// Accepts `{"re", "im"}` (either key optional) or a bare rational string.
pub fn gauss_from_json(v: &Value) -> Result<Gauss> {
    match v {
        Value::String(_) => Ok(Gauss::real(rational_from_json(v)?)),
        Value::Object(o) => {
            for k in o.keys() {
                if k != "re" && k != "im" {
                    return Err(Error::parse(k.as_str(), "unexpected key in complex scalar"));
                }
            }
            let part = |k: &str| -> Result<Rational> {
                o.get(k)
                    .map(|x| rational_from_json(x).map_err(|e| e.at(k)))
                    .unwrap_or_else(|| Ok(Rational::zero()))
            };
            Ok(Gauss::new(part("re")?, part("im")?))
        }
        other => Err(Error::parse("", format!("not a scalar: {other}"))),
    }
}

pub fn algebra_to_json(alg: &LieAlgebra) -> Value {
    let labels = alg.labels();
    let brackets: Vec<Value> = alg
        .brackets()
        .into_iter()
        .map(|((i, j), v)| {
            let value: BTreeMap<String, Value> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (labels[k].clone(), rational_to_json(c)))
                .collect();
            json!({ "x": labels[i], "y": labels[j], "value": value })
        })
        .collect();
    json!({ "name": alg.name(), "dim": alg.dim(), "basis": labels, "brackets": brackets })
}

pub fn algebra_from_json(v: &Value) -> Result<LieAlgebra> {
    let o = obj(v, "algebra")?;
    let name = string(field(o, "name")?, "name")?.to_string();
    let dim = field(o, "dim")?
        .as_u64()
        .ok_or_else(|| Error::parse("dim", "expected a non-negative integer"))?
        as usize;
    let labels: Vec<String> = arr(field(o, "basis")?, "basis")?
        .iter()
        .enumerate()
        .map(|(k, l)| {
            string(l, "")
                .map(str::to_string)
                .map_err(|e| e.at(&format!("basis[{k}]")))
        })
        .collect::<Result<_>>()?;
    if labels.len() != dim {
        return Err(Error::parse(
            "basis",
            format!("{} labels for dim {dim}", labels.len()),
        ));
    }
    let space =
        BasedSpace::new(labels.clone()).map_err(|e| Error::parse("basis", e.to_string()))?;
    let index = |l: &str, path: &str| {
        space
            .index_of(l, false)
            .ok_or_else(|| Error::parse(path, format!("unknown basis label {l:?}")))
    };
    let mut brackets = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let list = o
        .get("brackets")
        .map(|b| arr(b, "brackets"))
        .transpose()?
        .cloned()
        .unwrap_or_default();
    for (t, b) in list.iter().enumerate() {
        let path = format!("brackets[{t}]");
        let bo = obj(b, "bracket").map_err(|e| e.at(&path))?;
        let i = index(
            string(field(bo, "x").map_err(|e| e.at(&path))?, "x")?,
            &format!("{path}.x"),
        )?;
        let j = index(
            string(field(bo, "y").map_err(|e| e.at(&path))?, "y")?,
            &format!("{path}.y"),
        )?;
        if i >= j {
            return Err(Error::parse(
                &path,
                "bracket pairs must list x before y in basis order",
            ));
        }
        if !seen.insert((i, j)) {
            return Err(Error::parse(
                &path,
                format!("bracket [{}, {}] listed twice", labels[i], labels[j]),
            ));
        }
        let mut value = vec![Rational::zero(); dim];
        let vo =
            obj(field(bo, "value").map_err(|e| e.at(&path))?, "value").map_err(|e| e.at(&path))?;
        for (l, c) in vo {
            let k = index(l, &format!("{path}.value"))?;
            value[k] = rational_from_json(c).map_err(|e| e.at(&format!("{path}.value.{l}")))?;
        }
        brackets.push(((i, j), value));
    }
    LieAlgebra::new(name, labels, brackets)
}

pub fn element_to_json<S: Side>(space: &BasedSpace, e: &Exterior<S>) -> Value {
    let labels = if S::IS_FORM {
        space.dual_labels()
    } else {
        space.labels().to_vec()
    };
    let terms: Vec<Value> = e
        .terms()
        .iter()
        .map(|(m, c)| {
            let mono: Vec<&str> = m
                .indices()
                .into_iter()
                .map(|k| labels[k].as_str())
                .collect();
            json!({ "mono": mono, "coeff": gauss_to_json(c) })
        })
        .collect();
    json!({ "space": if S::IS_FORM { "form" } else { "vector" }, "terms": terms })
}

pub fn element_from_json<S: Side>(space: &BasedSpace, v: &Value) -> Result<Exterior<S>> {
    let o = obj(v, "element")?;
    let side = string(field(o, "space")?, "space")?;
    let want = if S::IS_FORM { "form" } else { "vector" };
    if side != want {
        return Err(Error::parse(
            "space",
            format!("expected a {want}, found {side:?}"),
        ));
    }
    let n = space.dim();
    let mut e = Exterior::<S>::zero(n);
    for (t, term) in arr(field(o, "terms")?, "terms")?.iter().enumerate() {
        let path = format!("terms[{t}]");
        let to = obj(term, "term").map_err(|e| e.at(&path))?;
        let mut idx = Vec::new();
        for l in
            arr(field(to, "mono").map_err(|e| e.at(&path))?, "mono").map_err(|e| e.at(&path))?
        {
            let l = string(l, "mono").map_err(|e| e.at(&path))?;
            let k = space.index_of(l, S::IS_FORM).ok_or_else(|| {
                Error::parse(format!("{path}.mono"), format!("unknown label {l:?}"))
            })?;
            if idx.contains(&k) {
                return Err(Error::parse(
                    format!("{path}.mono"),
                    format!("label {l:?} repeated"),
                ));
            }
            idx.push(k);
        }
        let c = gauss_from_json(field(to, "coeff").map_err(|e| e.at(&path))?)
            .map_err(|e| e.at(&format!("{path}.coeff")))?;
        e = &e + &Exterior::<S>::term(n, &idx, c);
    }
    Ok(e)
}

pub fn form_from_json(space: &BasedSpace, v: &Value) -> Result<Form> {
    element_from_json::<crate::exterior::Dual>(space, v)
}

pub fn multivector_from_json(space: &BasedSpace, v: &Value) -> Result<Multivector> {
    element_from_json::<crate::exterior::Primal>(space, v)
}

/// A degree-one vector given by coordinates.
pub fn vector_to_json(space: &BasedSpace, v: &[Gauss]) -> Value {
    element_to_json(space, &Multivector::from_vector(v))
}

/// A degree-one form given by coordinates.
pub fn covector_to_json(space: &BasedSpace, v: &[Gauss]) -> Value {
    element_to_json(space, &Form::from_vector(v))
}

fn degree_one<S: Side>(space: &BasedSpace, v: &Value) -> Result<Vector> {
    let e = element_from_json::<S>(space, v)?;
    if !e.is_homogeneous(1) {
        return Err(Error::parse("", "expected an element of degree one"));
    }
    Ok(e.to_coords(1))
}

pub fn field_to_json(f: Field) -> Value {
    serde_json::to_value(f).expect("field serializes")
}

fn field_from_json(v: &Value) -> Result<Field> {
    serde_json::from_value(v.clone())
        .map_err(|_| Error::parse("field", format!("expected \"Q\" or \"C\", found {v}")))
}

/// A subspace of vectors, by its canonical basis.
pub fn subspace_to_json(space: &BasedSpace, s: &Subspace) -> Value {
    let gens: Vec<Value> = s.basis().iter().map(|b| vector_to_json(space, b)).collect();
    json!({ "field": field_to_json(s.field()), "generators": gens })
}

pub fn subspace_from_json(space: &BasedSpace, v: &Value) -> Result<Subspace> {
    let o = obj(v, "subspace")?;
    let f = field_from_json(field(o, "field")?)?;
    let gens = arr(field(o, "generators")?, "generators")?
        .iter()
        .enumerate()
        .map(|(k, g)| {
            degree_one::<crate::exterior::Primal>(space, g)
                .map_err(|e| e.at(&format!("generators[{k}]")))
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(f, space.dim(), gens).map_err(|e| Error::parse("generators", e.to_string()))
}

pub fn omni_vector_to_json(space: &BasedSpace, a: &OmniVector) -> Value {
    json!({ "vector": vector_to_json(space, &a.vec), "form": covector_to_json(space, &a.form) })
}

pub fn omni_vector_from_json(space: &BasedSpace, v: &Value) -> Result<OmniVector> {
    let o = obj(v, "omni-vector")?;
    let vec = match o.get("vector") {
        Some(x) => degree_one::<crate::exterior::Primal>(space, x).map_err(|e| e.at("vector"))?,
        None => vec![Gauss::zero(); space.dim()],
    };
    let form = match o.get("form") {
        Some(x) => degree_one::<crate::exterior::Dual>(space, x).map_err(|e| e.at("form"))?,
        None => vec![Gauss::zero(); space.dim()],
    };
    Ok(OmniVector::new(vec, form))
}

pub fn omni_subspace_to_json(space: &BasedSpace, l: &OmniSubspace) -> Value {
    let gens: Vec<Value> = l
        .generators()
        .iter()
        .map(|g| omni_vector_to_json(space, g))
        .collect();
    json!({ "field": field_to_json(l.subspace().field()), "generators": gens })
}

pub fn omni_subspace_from_json(space: &BasedSpace, v: &Value) -> Result<OmniSubspace> {
    let o = obj(v, "omni subspace")?;
    let f = field_from_json(field(o, "field")?)?;
    let gens = arr(field(o, "generators")?, "generators")?
        .iter()
        .enumerate()
        .map(|(k, g)| {
            omni_vector_from_json(space, g).map_err(|e| e.at(&format!("generators[{k}]")))
        })
        .collect::<Result<Vec<_>>>()?;
    OmniSubspace::span(f, space.dim(), &gens).map_err(|e| Error::parse("generators", e.to_string()))
}

/// `{"matrix": rows}` with `matrix[i][j]` the `i`-th coordinate of `φ(e_j)`.
pub fn matrix_to_json(m: &[Vec<Rational>]) -> Value {
    let rows: Vec<Value> = m
        .iter()
        .map(|r| Value::Array(r.iter().map(rational_to_json).collect()))
        .collect();
    json!({ "matrix": rows })
}

pub fn matrix_from_json(v: &Value, n: usize) -> Result<Vec<Vec<Rational>>> {
    let o = obj(v, "matrix")?;
    let rows = arr(field(o, "matrix")?, "matrix")?;
    if rows.len() != n {
        return Err(Error::parse(
            "matrix",
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let r = arr(r, "row").map_err(|e| e.at(&format!("matrix[{i}]")))?;
            if r.len() != n {
                return Err(Error::parse(
                    format!("matrix[{i}]"),
                    format!("expected {n} entries, found {}", r.len()),
                ));
            }
            r.iter()
                .enumerate()
                .map(|(j, c)| rational_from_json(c).map_err(|e| e.at(&format!("matrix[{i}][{j}]"))))
                .collect()
        })
        .collect()
}

/// Monomial as a list of labels, used in witness payloads.
pub fn monomial_labels(labels: &[String], m: Monomial) -> Vec<String> {
    m.indices().into_iter().map(|k| labels[k].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn l52_json() -> Value {
        json!({
            "name": "L5_2", "dim": 5, "basis": ["e1","e2","e3","e4","e5"],
            "brackets": [{"x": "e1", "y": "e2", "value": {"e3": "1"}}]
        })
    }

    #[test]
    fn algebra_roundtrip() {
        let alg = algebra_from_json(&l52_json()).unwrap();
        assert_eq!(
            alg.validate().verdict,
            crate::certificate::Verdict::Verified
        );
        assert_eq!(algebra_to_json(&alg), l52_json());
        assert_eq!(algebra_from_json(&algebra_to_json(&alg)).unwrap(), alg);
    }

    #[test]
    fn algebra_errors() {
        let mut twice = l52_json();
        twice["brackets"]
            .as_array_mut()
            .unwrap()
            .push(json!({"x": "e1", "y": "e2", "value": {"e4": "1"}}));
        let err = algebra_from_json(&twice).unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref path, .. } if path == "brackets[1]"),
            "{err}"
        );
        let mut unknown = l52_json();
        unknown["brackets"][0]["value"] = json!({"e9": "1"});
        assert!(algebra_from_json(&unknown).is_err());
        let mut decimal = l52_json();
        decimal["brackets"][0]["value"] = json!({"e3": "0.5"});
        assert!(algebra_from_json(&decimal).is_err());
        let mut reversed = l52_json();
        reversed["brackets"][0] = json!({"x": "e2", "y": "e1", "value": {"e3": "1"}});
        assert!(algebra_from_json(&reversed).is_err());
    }

    #[test]
    fn form_roundtrip() {
        let alg = algebra_from_json(&l52_json()).unwrap();
        let space = alg.extend().unwrap().space().clone();
        let text = json!({"space": "form", "terms": [
            {"mono": ["e1", "e3"], "coeff": {"re": "1", "im": "0"}},
            {"mono": ["unit*", "e4"], "coeff": "-1"}
        ]});
        let f = form_from_json(&space, &text).unwrap();
        let expected =
            &Form::term(6, &[0, 2], Gauss::one()) - &Form::term(6, &[5, 3], Gauss::one());
        assert_eq!(f, expected);
        let canon = element_to_json(&space, &f);
        assert_eq!(form_from_json(&space, &canon).unwrap(), f);
        assert_eq!(
            element_to_json(&space, &form_from_json(&space, &canon).unwrap()),
            canon
        );
        let wrong = json!({"space": "form", "terms": [{"mono": ["unit"], "coeff": "1"}]});
        assert!(form_from_json(&space, &wrong).is_err());
        let rep = json!({"space": "form", "terms": [{"mono": ["e1", "e1"], "coeff": "1"}]});
        assert!(form_from_json(&space, &rep).is_err());
    }
}
