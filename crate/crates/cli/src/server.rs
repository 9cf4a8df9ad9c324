use std::net::SocketAddr;

use axum::body::Bytes;
use axum::extract::DefaultBodyLimit;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};
use tokio::net::TcpListener;

use nellipse::presets::presets;
use nellipse::raster::{Window, DEFAULT_BAND};
use nellipse::scene_io::scene_to_json;
use nellipse::TermOrder;

use crate::output::{equation_json, raster_bytes, RasterMode};
use crate::source::{resolve, SceneSource};
use crate::AppError;

const DEFAULT_SIZE: usize = 512;

impl IntoResponse for AppError {
    fn into_response(self) -> Response {
        let (status, path) = match &self {
            AppError::BadInput { path, .. } => (StatusCode::BAD_REQUEST, Some(path.clone())),
            AppError::TooLarge { .. } => (StatusCode::PAYLOAD_TOO_LARGE, None),
            AppError::Locus(_) | AppError::Raster(_) => (StatusCode::UNPROCESSABLE_ENTITY, None),
            AppError::Io(_) => (StatusCode::INTERNAL_SERVER_ERROR, None),
        };
        let message = match &self {
            AppError::BadInput { message, .. } => message.clone(),
            other => other.to_string(),
        };
        (status, Json(json!({"error": message, "path": path}))).into_response()
    }
}

fn parse_body<T: DeserializeOwned>(body: &[u8]) -> Result<T, AppError> {
    let de = &mut serde_json::Deserializer::from_slice(body);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." { "body".to_string() } else { path };
        AppError::bad(path, e.into_inner().to_string())
    })
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Style {
    Graded,
    Classic,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EquationRequest {
    #[serde(default)]
    scene: Option<Value>,
    #[serde(default)]
    preset: Option<String>,
    #[serde(default)]
    style: Option<Style>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RasterRequest {
    #[serde(default)]
    scene: Option<Value>,
    #[serde(default)]
    preset: Option<String>,
    #[serde(default)]
    window: Option<Window>,
    #[serde(default)]
    width: Option<usize>,
    #[serde(default)]
    height: Option<usize>,
    mode: RasterMode,
    #[serde(default)]
    tol: Option<f64>,
}

async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> Result<T, AppError> + Send + 'static,
) -> Result<T, AppError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| AppError::Io(std::io::Error::other(e)))?
}

async fn equation(body: Bytes) -> Result<Json<Value>, AppError> {
    let req: EquationRequest = parse_body(&body)?;
    let source = SceneSource {
        scene: req.scene,
        preset: req.preset,
    };
    let order = match req.style {
        Some(Style::Classic) => TermOrder::Classic,
        _ => TermOrder::GradedLex,
    };
    let (scene, _) = resolve(&source)?;
    Ok(Json(blocking(move || equation_json(&scene, order)).await?))
}

async fn raster(body: Bytes) -> Result<Response, AppError> {
    let req: RasterRequest = parse_body(&body)?;
    let source = SceneSource {
        scene: req.scene,
        preset: req.preset,
    };
    let (scene, default_window) = resolve(&source)?;
    let window = req.window.unwrap_or(default_window);
    let width = req.width.unwrap_or(DEFAULT_SIZE);
    let height = req.height.unwrap_or(DEFAULT_SIZE);
    let band = req.tol.unwrap_or(DEFAULT_BAND);
    let out = blocking(move || raster_bytes(&scene, &window, width, height, req.mode, band)).await?;
    Ok(([(header::CONTENT_TYPE, out.content_type)], out.bytes).into_response())
}

async fn preset_list() -> Json<Value> {
    let list: Vec<Value> = presets()
        .iter()
        .map(|p| {
            json!({
                "name": p.name,
                "description": p.description,
                "scene": scene_to_json(&p.scene, Some(p.name)),
                "window": p.window,
            })
        })
        .collect();
    Json(Value::Array(list))
}

pub fn router() -> Router {
    Router::new()
        .route("/api/health", get(|| async { "ok" }))
        .route("/api/presets", get(preset_list))
        .route("/api/equation", post(equation))
        .route("/api/raster", post(raster))
        .layer(DefaultBodyLimit::max(1 << 20))
}

/// Serves the API on an already bound listener.
pub async fn serve_on(listener: TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router()).await
}

/// Binds `127.0.0.1:port` (0 picks a free port), announces the address on
/// stdout and serves until the process ends.
pub fn serve_blocking(port: u16) -> std::io::Result<()> {
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let listener = TcpListener::bind(SocketAddr::from(([127, 0, 0, 1], port))).await?;
        println!("listening on http://{}", listener.local_addr()?);
        use std::io::Write;
        std::io::stdout().flush()?;
        serve_on(listener).await
    })
}
