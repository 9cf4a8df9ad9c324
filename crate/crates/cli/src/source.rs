use serde::Deserialize;
use serde_json::Value;

use nellipse::presets::preset;
use nellipse::raster::Window;
use nellipse::scene_io::{parse_scene_value, SceneError};
use nellipse::Scene;

use crate::AppError;

/// Where a scene comes from: an inline scene document or a preset name.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct SceneSource {
    #[serde(default)]
    pub scene: Option<Value>,
    #[serde(default)]
    pub preset: Option<String>,
}

fn scene_error(prefix: &str, e: SceneError) -> AppError {
    let path = if e.path == "$" {
        prefix.to_string()
    } else {
        format!("{prefix}.{}", e.path)
    };
    AppError::bad(path, e.message)
}

/// Resolves a source into a scene and its default window.
pub fn resolve(source: &SceneSource) -> Result<(Scene, Window), AppError> {
    match (&source.scene, &source.preset) {
        (Some(_), Some(_)) => Err(AppError::bad("scene", "give either scene or preset, not both")),
        (None, None) => Err(AppError::bad("scene", "missing scene or preset")),
        (None, Some(name)) => {
            let p = preset(name).ok_or_else(|| AppError::bad("preset", format!("unknown preset {name:?}")))?;
            Ok((p.scene, p.window))
        }
        (Some(doc), None) => {
            let file = parse_scene_value(doc.clone()).map_err(|e| scene_error("scene", e))?;
            let window = auto_window(&file.scene);
            Ok((file.scene, window))
        }
    }
}

/// Square window around the foci, padded by the radius.
pub fn auto_window(scene: &Scene) -> Window {
    let foci = scene.foci_f64();
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &foci {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let (cx, cy) = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
    let half = (xmax - xmin).max(ymax - ymin) / 2.0 + scene.s_f64().max(1.0) + 1.0;
    Window::new(cx - half, cx + half, cy - half, cy + half).expect("padded window is valid")
}
