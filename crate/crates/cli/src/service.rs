//! Stateless JSON endpoints under `/v1`.
//!
//! Every response depends on the request body alone. Request bodies are
//! parsed by hand so that malformed JSON gives 400 with a position instead of
//! the extractor's default status.

use axum::body::Bytes;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use mutclass_core::io::{DiagramDocument, ViolationEntry};
use mutclass_core::{Diagram, EnumError, IoError, MutationError};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::summary::{ClassifySummary, OrbitLimits, OrbitSummary};

/// Requests asking for more members than this are clamped to it.
pub const MAX_ORBIT_MEMBERS: usize = 200_000;

#[derive(Debug, Error)]
pub enum ApiError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("diagram is invalid")]
    Validation(Vec<ViolationEntry>),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("{0}")]
    Unprocessable(String),
    #[error("enumeration stopped at {size} members before exhausting the class")]
    LimitExceeded { size: usize },
    #[error("worker failed: {0}")]
    Internal(String),
}

impl ApiError {
    fn status(&self) -> StatusCode {
        match self {
            ApiError::Parse { .. } | ApiError::Field { .. } | ApiError::Validation(_) => StatusCode::BAD_REQUEST,
            ApiError::UnknownVertex(_) | ApiError::Unprocessable(_) => StatusCode::UNPROCESSABLE_ENTITY,
            ApiError::LimitExceeded { .. } => StatusCode::SERVICE_UNAVAILABLE,
            ApiError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
        }
    }

    fn code(&self) -> &'static str {
        match self {
            ApiError::Parse { .. } => "parse",
            ApiError::Field { .. } => "field",
            ApiError::Validation(_) => "validation",
            ApiError::UnknownVertex(_) => "unknown_vertex",
            ApiError::Unprocessable(_) => "unprocessable",
            ApiError::LimitExceeded { .. } => "limit_exceeded",
            ApiError::Internal(_) => "internal",
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let mut body = json!({ "error": self.code(), "message": self.to_string() });
        match &self {
            ApiError::Parse { line, column, .. } => {
                body["line"] = json!(line);
                body["column"] = json!(column);
            }
            ApiError::Field { field, .. } => body["field"] = json!(field),
            ApiError::Validation(v) => body["violations"] = json!(v),
            ApiError::LimitExceeded { size } => body["size"] = json!(size),
            _ => {}
        }
        (self.status(), Json(body)).into_response()
    }
}

impl From<EnumError> for ApiError {
    fn from(e: EnumError) -> Self {
        ApiError::Unprocessable(e.to_string())
    }
}

impl From<MutationError> for ApiError {
    fn from(e: MutationError) -> Self {
        ApiError::Unprocessable(e.to_string())
    }
}

fn body<T: DeserializeOwned>(bytes: &[u8]) -> Result<T, ApiError> {
    serde_json::from_slice(bytes).map_err(|e| ApiError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn load(doc: &DiagramDocument) -> Result<Diagram, ApiError> {
    doc.to_diagram().map_err(|e| match e {
        IoError::Validation(v) => {
            let ids = doc.ids();
            ApiError::Validation(v.iter().map(|v| ViolationEntry::new(v, &ids)).collect())
        }
        IoError::Field { field, message } => ApiError::Field { field, message },
        IoError::Parse { line, column, message } => ApiError::Parse { line, column, message },
        IoError::Io(e) => ApiError::Internal(e.to_string()),
    })
}

async fn blocking<T, F>(f: F) -> Result<T, ApiError>
where
    F: FnOnce() -> Result<T, ApiError> + Send + 'static,
    T: Send + 'static,
{
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::Internal(e.to_string()))?
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramRequest {
    diagram: DiagramDocument,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MutateRequest {
    diagram: DiagramDocument,
    vertex: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OrbitRequest {
    diagram: DiagramDocument,
    #[serde(default)]
    limits: Option<OrbitLimits>,
}

#[derive(Serialize)]
struct DiagramResponse {
    diagram: DiagramDocument,
}

#[derive(Serialize)]
struct ValidateResponse {
    violations: Vec<ViolationEntry>,
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok" }))
}

async fn classify(bytes: Bytes) -> Result<Json<ClassifySummary>, ApiError> {
    let req: DiagramRequest = body(&bytes)?;
    let d = load(&req.diagram)?;
    Ok(Json(blocking(move || Ok(ClassifySummary::of(&d))).await?))
}

async fn mutate(bytes: Bytes) -> Result<Json<DiagramResponse>, ApiError> {
    let req: MutateRequest = body(&bytes)?;
    let d = load(&req.diagram)?;
    let k = req
        .diagram
        .vertices
        .iter()
        .position(|v| v.id == req.vertex)
        .ok_or_else(|| ApiError::UnknownVertex(req.vertex.clone()))?;
    let m = d.mutate(k)?;
    Ok(Json(DiagramResponse {
        diagram: DiagramDocument::from_diagram(&m),
    }))
}

/// Invalid diagrams are a normal answer here; only unreadable documents fail.
async fn validate(bytes: Bytes) -> Result<Json<ValidateResponse>, ApiError> {
    let req: DiagramRequest = body(&bytes)?;
    let violations = match load(&req.diagram) {
        Ok(_) => Vec::new(),
        Err(ApiError::Validation(v)) => v,
        Err(e) => return Err(e),
    };
    Ok(Json(ValidateResponse { violations }))
}

async fn orbit(bytes: Bytes) -> Result<Json<OrbitSummary>, ApiError> {
    let req: OrbitRequest = body(&bytes)?;
    let d = load(&req.diagram)?;
    let mut limits = req.limits.unwrap_or_default();
    limits.max_members = limits.max_members.min(MAX_ORBIT_MEMBERS);
    let summary = blocking(move || Ok(OrbitSummary::of(&d, limits.into())?)).await?;
    if !summary.exhausted {
        return Err(ApiError::LimitExceeded { size: summary.size });
    }
    Ok(Json(summary))
}

pub fn router() -> Router {
    Router::new()
        .route("/v1/health", get(health))
        .route("/v1/classify", post(classify))
        .route("/v1/mutate", post(mutate))
        .route("/v1/validate", post(validate))
        .route("/v1/orbit", post(orbit))
}

/// Serves until interrupted.
pub async fn serve(addr: &str) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router())
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
