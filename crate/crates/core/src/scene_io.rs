//! Scene documents: `{"foci":[{"x":"-1","y":"0"}, …], "s":"1", "name":"…"}`.
//!
//! Coordinates are rational strings (`"p/q"`, `"p"`, or terminating
//! decimals), bare integers, or surd objects `{"a":"p/q","b":"r/s","d":3}`
//! denoting `a + b√d`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::locus::{LocusError, Point, Scene};
use crate::numeric::{QuadraticNumber, Rational};

/// Parse failure, located by a JSON field path such as `foci[2].y.d`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct SceneError {
    pub path: String,
    pub message: String,
}

impl SceneError {
    fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        SceneError {
            path: path.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    x: Value,
    y: Value,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SceneDoc {
    foci: Vec<PointDoc>,
    s: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

/// Parsed scene document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneFile {
    pub name: Option<String>,
    pub scene: Scene,
}

fn parse_rational(v: &Value, path: &str) -> Result<Rational, SceneError> {
    match v {
        Value::String(s) => s
            .parse::<Rational>()
            .map_err(|e| SceneError::at(path, e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(Rational::from(n.as_i64().expect("i64"))),
        _ => Err(SceneError::at(path, "expected a rational string such as \"-4/3\"")),
    }
}

fn parse_coordinate(v: &Value, path: &str) -> Result<QuadraticNumber, SceneError> {
    let Value::Object(map) = v else {
        return parse_rational(v, path).map(QuadraticNumber::rational);
    };
    if let Some(key) = map.keys().find(|k| !matches!(k.as_str(), "a" | "b" | "d")) {
        return Err(SceneError::at(format!("{path}.{key}"), "unknown field"));
    }
    let field = |k: &str| {
        map.get(k)
            .ok_or_else(|| SceneError::at(format!("{path}.{k}"), "missing field"))
    };
    let a = parse_rational(field("a")?, &format!("{path}.a"))?;
    let b = parse_rational(field("b")?, &format!("{path}.b"))?;
    let d = field("d")?
        .as_u64()
        .ok_or_else(|| SceneError::at(format!("{path}.d"), "expected a positive integer radicand"))?;
    QuadraticNumber::new(a, b, d).map_err(|e| SceneError::at(format!("{path}.d"), e.to_string()))
}

/// Parses and validates a scene document.
pub fn parse_scene_file(text: &str) -> Result<SceneFile, SceneError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: SceneDoc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        SceneError::at(if path == "." { "$".into() } else { path }, e.into_inner().to_string())
    })?;
    scene_from_doc(doc)
}

/// Parses a scene document from an already-decoded JSON value.
pub fn parse_scene_value(value: Value) -> Result<SceneFile, SceneError> {
    let doc: SceneDoc = serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        SceneError::at(if path == "." { "$".into() } else { path }, e.into_inner().to_string())
    })?;
    scene_from_doc(doc)
}

pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    parse_scene_file(text).map(|f| f.scene)
}

fn scene_from_doc(doc: SceneDoc) -> Result<SceneFile, SceneError> {
    if doc.foci.is_empty() {
        return Err(SceneError::at("foci", "at least one focus is required"));
    }
    let mut foci = Vec::with_capacity(doc.foci.len());
    let mut radicand: Option<(u64, String)> = None;
    for (i, p) in doc.foci.iter().enumerate() {
        let mut coords = Vec::with_capacity(2);
        for (axis, v) in [("x", &p.x), ("y", &p.y)] {
            let path = format!("foci[{i}].{axis}");
            let c = parse_coordinate(v, &path)?;
            if let Some(d) = c.radicand() {
                match &radicand {
                    Some((r, first)) if *r != d => {
                        return Err(SceneError::at(
                            path,
                            format!("radicand {d} conflicts with radicand {r} at {first}"),
                        ))
                    }
                    _ => radicand = Some((d, path.clone())),
                }
            }
            coords.push(c);
        }
        let y = coords.pop().expect("y");
        let x = coords.pop().expect("x");
        foci.push(Point::new(x, y));
    }
    let s = parse_rational(&doc.s, "s")?;
    let scene = Scene::new(foci, s).map_err(|e| match e {
        LocusError::NegativeRadius(_) => SceneError::at("s", e.to_string()),
        other => SceneError::at("$", other.to_string()),
    })?;
    Ok(SceneFile {
        name: doc.name,
        scene,
    })
}

fn coordinate_json(c: &QuadraticNumber) -> Value {
    if c.is_rational() {
        Value::String(c.a().to_string())
    } else {
        json!({"a": c.a().to_string(), "b": c.b().to_string(), "d": c.d()})
    }
}

/// JSON document for a scene; parses back to an equal scene.
pub fn scene_to_json(scene: &Scene, name: Option<&str>) -> Value {
    let foci: Vec<Value> = scene
        .foci()
        .iter()
        .map(|p| json!({"x": coordinate_json(&p.x), "y": coordinate_json(&p.y)}))
        .collect();
    let mut doc = json!({"foci": foci, "s": scene.s().to_string()});
    if let Some(n) = name {
        doc["name"] = Value::String(n.to_string());
    }
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_focus_scene() {
        let s = parse_scene(r#"{"foci":[{"x":"-1","y":"0"}],"s":"1"}"#).unwrap();
        assert_eq!(s.n(), 1);
        assert_eq!(s.foci()[0], Point::int(-1, 0));
        assert_eq!(s.s(), &Rational::one());
    }

    #[test]
    fn surd_focus_scene() {
        let text = r#"{"foci":[{"x":"-1","y":"0"},{"x":"1","y":"0"},
            {"x":"0","y":{"a":"0","b":"1","d":3}}],"s":"0","name":"van-schooten"}"#;
        let f = parse_scene_file(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("van-schooten"));
        assert_eq!(f.scene.radicand(), Some(3));
        assert_eq!(f.scene.foci()[2].y, QuadraticNumber::sqrt(3).unwrap());
    }

    #[test]
    fn rejects_bad_documents_with_paths() {
        let err = parse_scene(r#"{"foci":[],"s":"1"}"#).unwrap_err();
        assert_eq!(err.path, "foci");
        let err = parse_scene(r#"{"foci":[{"x":"1/0","y":"0"}],"s":"1"}"#).unwrap_err();
        assert_eq!(err.path, "foci[0].x");
        let err = parse_scene(r#"{"foci":[{"x":"1","y":"0"}],"s":"-2"}"#).unwrap_err();
        assert_eq!(err.path, "s");
        let err = parse_scene(r#"{"foci":[{"x":"1","y":"0","z":"3"}],"s":"1"}"#).unwrap_err();
        assert!(err.path.starts_with("foci[0]"), "{err}");
        let err = parse_scene(r#"{"foci":[{"x":"1","y":"0"}],"s":"1","colour":1}"#).unwrap_err();
        assert!(err.message.contains("unknown field"), "{err}");
        let mixed = r#"{"foci":[{"x":{"a":"0","b":"1","d":2},"y":"0"},
            {"x":"0","y":{"a":"0","b":"1","d":3}}],"s":"1"}"#;
        let err = parse_scene(mixed).unwrap_err();
        assert_eq!(err.path, "foci[1].y");
        let err = parse_scene(r#"{"foci":[{"x":{"a":"0","b":"1","d":12},"y":"0"}],"s":"1"}"#).unwrap_err();
        assert_eq!(err.path, "foci[0].x.d");
        let err = parse_scene(r#"{"foci":[{"x":"0"}],"s":"1"}"#).unwrap_err();
        assert!(err.message.contains("missing field"), "{err}");
    }

    fn coordinate() -> impl Strategy<Value = QuadraticNumber> {
        (-20i64..20, 1i64..7, -5i64..5, 1i64..4, prop::bool::ANY).prop_map(|(a, da, b, db, surd)| {
            let a = Rational::new(a, da).unwrap();
            if surd {
                QuadraticNumber::new(a, Rational::new(b, db).unwrap(), 3).unwrap()
            } else {
                QuadraticNumber::rational(a)
            }
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(
            coords in prop::collection::vec((coordinate(), coordinate()), 1..5),
            s in (0i64..40, 1i64..9),
        ) {
            let foci = coords.into_iter().map(|(x, y)| Point::new(x, y)).collect();
            let scene = Scene::new(foci, Rational::new(s.0, s.1).unwrap()).unwrap();
            let text = scene_to_json(&scene, Some("t")).to_string();
            let back = parse_scene_file(&text).unwrap();
            prop_assert_eq!(back.scene, scene);
            prop_assert_eq!(back.name.as_deref(), Some("t"));
        }
    }
}
