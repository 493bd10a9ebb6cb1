use std::net::SocketAddr;
use std::sync::Arc;

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{Authd, AuthdError, Challenge, RoundOutcome, Session};
use crate::graph::{parse_graph_text, to_graph_text, Rule, TopsnutGpw};
use crate::keylock::AuthRule;

/// A graph in the text format plus a rule tag. For registration the tag is
/// the authentication rule; for keys it is the key's labelling rule.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphEnvelope {
    pub graph: String,
    #[serde(default)]
    pub rule: Option<String>,
}

#[derive(Debug, Deserialize)]
struct RegisterBody {
    user_id: String,
    rounds: Vec<GraphEnvelope>,
}

#[derive(Debug, Deserialize)]
struct StartBody {
    user_id: String,
}

#[derive(Debug, Serialize)]
struct ChallengeView {
    round: usize,
    template: Option<String>,
    rotation: usize,
}

impl From<Challenge> for ChallengeView {
    fn from(c: Challenge) -> Self {
        ChallengeView {
            round: c.round,
            template: c.template.map(|g| to_graph_text(&TopsnutGpw::unlabelled(g))),
            rotation: c.rotation,
        }
    }
}

struct ApiError(AuthdError);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match self.0 {
            AuthdError::Conflict(_) | AuthdError::SessionClosed(_) => StatusCode::CONFLICT,
            AuthdError::UnknownUser(_) | AuthdError::UnknownSession(_) => StatusCode::NOT_FOUND,
            AuthdError::Validation(_) => StatusCode::BAD_REQUEST,
            AuthdError::Store { .. } | AuthdError::Io(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        (status, Json(json!({ "error": self.0.to_string() }))).into_response()
    }
}

impl From<AuthdError> for ApiError {
    fn from(e: AuthdError) -> Self {
        ApiError(e)
    }
}

fn invalid(e: impl ToString) -> ApiError {
    ApiError(AuthdError::Validation(e.to_string()))
}

fn parse_key(env: &GraphEnvelope) -> Result<TopsnutGpw, ApiError> {
    let rule: Rule = env.rule.as_deref().unwrap_or("free").parse().map_err(invalid)?;
    parse_graph_text(&env.graph, rule).map_err(invalid)
}

async fn register(State(svc): State<Arc<Authd>>, Json(body): Json<RegisterBody>) -> Result<Response, ApiError> {
    let rounds = body
        .rounds
        .iter()
        .map(|env| {
            let rule: AuthRule = env.rule.as_deref().unwrap_or("").parse().map_err(invalid)?;
            let lock = parse_graph_text(&env.graph, Rule::Free).map_err(invalid)?;
            Ok((lock, rule))
        })
        .collect::<Result<Vec<_>, ApiError>>()?;
    let rec = svc.register(&body.user_id, &rounds)?;
    let reply = json!({ "user_id": rec.user_id, "rounds": rec.rounds.len(), "created_at": rec.created_at });
    Ok((StatusCode::CREATED, Json(reply)).into_response())
}

async fn start(State(svc): State<Arc<Authd>>, Json(body): Json<StartBody>) -> Result<Response, ApiError> {
    let (session, challenge) = svc.start_session(&body.user_id)?;
    let reply = json!({ "session": session, "challenge": ChallengeView::from(challenge) });
    Ok((StatusCode::CREATED, Json(reply)).into_response())
}

async fn submit(
    State(svc): State<Arc<Authd>>,
    Path(id): Path<String>,
    Json(env): Json<GraphEnvelope>,
) -> Result<Json<serde_json::Value>, ApiError> {
    let key = parse_key(&env)?;
    let (session, outcome): (Session, RoundOutcome) = svc.submit_round(&id, &key)?;
    let (word, challenge) = match outcome {
        RoundOutcome::Continue(c) => ("continue", Some(ChallengeView::from(c))),
        RoundOutcome::Accepted => ("accepted", None),
        RoundOutcome::Rejected => ("rejected", None),
    };
    Ok(Json(json!({ "outcome": word, "session": session, "challenge": challenge })))
}

async fn health(State(svc): State<Arc<Authd>>) -> Json<serde_json::Value> {
    Json(json!({ "status": "ok", "users": svc.user_count() }))
}

pub fn router(svc: Arc<Authd>) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/users", post(register))
        .route("/sessions", post(start))
        .route("/sessions/{id}/rounds", post(submit))
        .with_state(svc)
}

/// Serves until Ctrl-C.
pub async fn serve(svc: Arc<Authd>, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(svc))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
