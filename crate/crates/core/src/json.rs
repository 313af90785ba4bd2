//! JSON encodings for the external interfaces.
//!
//! Words are arrays of `"x"` / `"x*"`; diagrams list their boundary words
//! and sorted arc pairs; morphisms list terms in canonical diagram order;
//! scalar encodings are backend-specific (`"p/q"` strings, `{num, den}`
//! coefficient arrays, `[re, im]` pairs). Output is deterministic: maps are
//! emitted with sorted keys and every list is in canonical order.

use crate::diagrams::{Arc, BoundaryPoint, OrientedDiagram, Side};
use crate::fiber::{DenseTensor, FiberData};
use crate::fusion::FusionResult;
use crate::hopf::{Relation, RelationSet};
use crate::linalg::Matrix;
use crate::morphisms::Morphism;
use crate::scalars::{Field, FieldContext};
use crate::words::{Letter, Word};
use crate::Error;
use serde_json::{json, Map, Value};

pub fn word_to_json(w: &Word) -> Value {
    Value::Array(
        w.letters()
            .iter()
            .map(|l| Value::String(l.as_str().to_string()))
            .collect(),
    )
}

pub fn word_from_json(v: &Value) -> Result<Word, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected word array, got {v}")))?;
    let letters = arr
        .iter()
        .map(|item| {
            item.as_str()
                .ok_or_else(|| Error::Parse(format!("expected letter string, got {item}")))
                .and_then(Letter::parse)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word::from_letters(letters))
}

fn point_to_json(p: BoundaryPoint) -> Value {
    let side = match p.side {
        Side::Top => "top",
        Side::Bottom => "bottom",
    };
    json!([side, p.index])
}

fn point_from_json(v: &Value) -> Result<BoundaryPoint, Error> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Parse(format!("expected [side, index], got {v}")))?;
    let side = match arr[0].as_str() {
        Some("top") => Side::Top,
        Some("bottom") => Side::Bottom,
        _ => return Err(Error::Parse(format!("bad side in {v}"))),
    };
    let index = arr[1]
        .as_u64()
        .ok_or_else(|| Error::Parse(format!("bad index in {v}")))? as usize;
    Ok(BoundaryPoint { side, index })
}

pub fn diagram_to_json(d: &OrientedDiagram) -> Value {
    json!({
        "top": word_to_json(d.top()),
        "bottom": word_to_json(d.bottom()),
        "arcs": d.arcs().iter()
            .map(|a| json!([point_to_json(a.first()), point_to_json(a.second())]))
            .collect::<Vec<_>>(),
    })
}

pub fn diagram_from_json(v: &Value) -> Result<OrientedDiagram, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected diagram object, got {v}")))?;
    let top = word_from_json(
        obj.get("top")
            .ok_or_else(|| Error::Parse("diagram missing `top`".into()))?,
    )?;
    let bottom = word_from_json(
        obj.get("bottom")
            .ok_or_else(|| Error::Parse("diagram missing `bottom`".into()))?,
    )?;
    let arcs = obj
        .get("arcs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("diagram missing `arcs` array".into()))?
        .iter()
        .map(|pair| {
            let ends = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse(format!("bad arc {pair}")))?;
            Ok(Arc::new(point_from_json(&ends[0])?, point_from_json(&ends[1])?))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    OrientedDiagram::new(top, bottom, arcs)
        .map_err(|_| Error::Parse("invalid diagram data".into()))
}

pub fn morphism_to_json<K: Field>(m: &Morphism<K>) -> Value {
    json!({
        "domain": word_to_json(m.domain()),
        "codomain": word_to_json(m.codomain()),
        "terms": m.terms()
            .map(|(d, c)| json!({"diagram": diagram_to_json(d), "coeff": c.to_json()}))
            .collect::<Vec<_>>(),
    })
}

pub fn morphism_from_json<K: Field>(v: &Value) -> Result<Morphism<K>, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected morphism object, got {v}")))?;
    let domain = word_from_json(
        obj.get("domain")
            .ok_or_else(|| Error::Parse("morphism missing `domain`".into()))?,
    )?;
    let codomain = word_from_json(
        obj.get("codomain")
            .ok_or_else(|| Error::Parse("morphism missing `codomain`".into()))?,
    )?;
    let mut out = Morphism::zero(domain.clone(), codomain.clone());
    for term in obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("morphism missing `terms` array".into()))?
    {
        let tobj = term
            .as_object()
            .ok_or_else(|| Error::Parse(format!("bad term {term}")))?;
        let diagram = diagram_from_json(
            tobj.get("diagram")
                .ok_or_else(|| Error::Parse("term missing `diagram`".into()))?,
        )?;
        if diagram.top() != &domain || diagram.bottom() != &codomain {
            return Err(Error::Parse(format!(
                "term diagram has type ({}, {}), expected ({domain}, {codomain})",
                diagram.top(),
                diagram.bottom()
            )));
        }
        let coeff = K::from_json(
            tobj.get("coeff")
                .ok_or_else(|| Error::Parse("term missing `coeff`".into()))?,
        )?;
        out = out.add(&Morphism::single(diagram, coeff))?;
    }
    Ok(out)
}

pub fn fusion_to_json(r: &FusionResult) -> Value {
    json!({
        "labels": r.iter()
            .map(|(w, m)| json!({"word": word_to_json(w), "mult": m}))
            .collect::<Vec<_>>(),
    })
}

pub fn fusion_from_json(v: &Value) -> Result<FusionResult, Error> {
    let arr = v
        .as_object()
        .and_then(|o| o.get("labels"))
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("expected fusion result, got {v}")))?;
    let mut out = FusionResult::empty();
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| Error::Parse(format!("bad label {item}")))?;
        let word = word_from_json(
            obj.get("word")
                .ok_or_else(|| Error::Parse("label missing `word`".into()))?,
        )?;
        let mult = obj
            .get("mult")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("label missing `mult`".into()))?;
        out.add(word, mult);
    }
    Ok(out)
}

pub fn matrix_to_json<K: Field>(m: &Matrix<K>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| m[(i, j)].to_json()).collect()))
            .collect(),
    )
}

pub fn matrix_from_json<K: Field>(v: &Value) -> Result<Matrix<K>, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected matrix rows, got {v}")))?;
    let parsed = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse(format!("expected matrix row, got {row}")))?
                .iter()
                .map(K::from_json)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed)
}

/// Fiber bundle `{"a": matrix, "b": matrix}`; validation happens on parse.
pub fn fiber_to_json<K: Field>(fd: &FiberData<K>) -> Value {
    json!({
        "a": matrix_to_json(fd.a()),
        "b": matrix_to_json(fd.b()),
    })
}

pub fn fiber_from_json<K: Field>(
    v: &Value,
    ctx: &FieldContext<K>,
) -> Result<FiberData<K>, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected fiber object, got {v}")))?;
    let a = matrix_from_json(
        obj.get("a")
            .ok_or_else(|| Error::Parse("fiber data missing `a`".into()))?,
    )?;
    let b = matrix_from_json(
        obj.get("b")
            .ok_or_else(|| Error::Parse("fiber data missing `b`".into()))?,
    )?;
    crate::fiber::validate_fiber(a, b, ctx)
}

pub fn tensor_to_json<K: Field>(t: &DenseTensor<K>) -> Value {
    json!({
        "n": t.n(),
        "top_axes": t.top_axes(),
        "bottom_axes": t.bottom_axes(),
        "entries": t.flattened().iter().map(Field::to_json).collect::<Vec<_>>(),
    })
}

fn relation_to_json<K: Field>(rel: &Relation<K>) -> Value {
    json!({
        "lhs": rel.lhs.iter()
            .map(|(coeff, mono)| json!([
                coeff.to_json(),
                mono.iter().map(|g| Value::String(g.to_string())).collect::<Vec<_>>(),
            ]))
            .collect::<Vec<_>>(),
        "rhs": rel.rhs.to_json(),
    })
}

pub fn relation_set_to_json<K: Field>(rs: &RelationSet<K>) -> Value {
    let mut coproduct = Map::new();
    for (gen, terms) in rs.coproduct() {
        coproduct.insert(
            gen.to_string(),
            Value::Array(
                terms
                    .iter()
                    .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                    .collect(),
            ),
        );
    }
    json!({
        "n": rs.n(),
        "gens": rs.generators().iter().map(|g| Value::String(g.to_string())).collect::<Vec<_>>(),
        "relations": rs.relations().iter().map(relation_to_json).collect::<Vec<_>>(),
        "coproduct": Value::Object(coproduct),
    })
}
