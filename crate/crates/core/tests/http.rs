mod common;

use std::sync::Arc;

use serde_json::{json, Value};

use common::labelled;
use topsnut::authd::{router, Authd, Store};
use topsnut::graph::{to_graph_text, Graph, Rule, TopsnutGpw};

struct Server {
    base: String,
    http: reqwest::Client,
}

impl Server {
    async fn start(svc: Arc<Authd>) -> Self {
        let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
        let base = format!("http://{}", listener.local_addr().unwrap());
        let app = router(svc);
        tokio::spawn(async move { axum::serve(listener, app).await });
        Server { base, http: reqwest::Client::new() }
    }

    async fn post(&self, path: &str, body: Value) -> (u16, Value) {
        let r = self.http.post(format!("{}{path}", self.base)).json(&body).send().await.unwrap();
        (r.status().as_u16(), r.json().await.unwrap())
    }

    async fn get(&self, path: &str) -> (u16, Value) {
        let r = self.http.get(format!("{}{path}", self.base)).send().await.unwrap();
        (r.status().as_u16(), r.json().await.unwrap())
    }
}

fn key() -> TopsnutGpw {
    labelled(Graph::path(4), &[0, 5, 2, 3], Rule::TwinOddGraceful)
}

fn lock() -> TopsnutGpw {
    labelled(Graph::path(4), &[1, 6, 3, 4], Rule::TwinOddGraceful)
}

fn envelope(g: &TopsnutGpw, rule: &str) -> Value {
    json!({ "graph": to_graph_text(g), "rule": rule })
}

async fn fresh() -> (Server, Arc<Authd>) {
    let svc = Arc::new(Authd::new(Store::in_memory(), vec![Graph::path(4)]).unwrap());
    let server = Server::start(svc.clone()).await;
    let (st, _) =
        server.post("/users", json!({ "user_id": "ada", "rounds": [envelope(&lock(), "twin-odd-graceful")] })).await;
    assert_eq!(st, 201);
    (server, svc)
}

#[tokio::test]
async fn health_reports_users() {
    let (server, _) = fresh().await;
    let (st, v) = server.get("/health").await;
    assert_eq!(st, 200);
    assert_eq!(v, json!({ "status": "ok", "users": 1 }));
}

#[tokio::test]
async fn registration_errors() {
    let (server, _) = fresh().await;
    let dup = json!({ "user_id": "ada", "rounds": [envelope(&lock(), "twin-odd-graceful")] });
    assert_eq!(server.post("/users", dup).await.0, 409);

    let not_twin = labelled(Graph::path(4), &[0, 1, 2, 3], Rule::Free);
    let body = json!({ "user_id": "bob", "rounds": [envelope(&not_twin, "twin-odd-graceful")] });
    let (st, v) = server.post("/users", body).await;
    assert_eq!(st, 400);
    assert!(v["error"].is_string());

    let body = json!({ "user_id": "bob", "rounds": [] });
    assert_eq!(server.post("/users", body).await.0, 400);
    let body = json!({ "user_id": "bob", "rounds": [{ "graph": "2 1\n0 9\n", "rule": "matrix-equality" }] });
    assert_eq!(server.post("/users", body).await.0, 400);
    let body = json!({ "user_id": "bob", "rounds": [envelope(&lock(), "no-such-rule")] });
    assert_eq!(server.post("/users", body).await.0, 400);
}

#[tokio::test]
async fn session_lifecycle() {
    let (server, _) = fresh().await;
    assert_eq!(server.post("/sessions", json!({ "user_id": "nobody" })).await.0, 404);
    assert_eq!(server.post("/sessions/deadbeef/rounds", envelope(&key(), "twin-odd-graceful")).await.0, 404);

    let (st, v) = server.post("/sessions", json!({ "user_id": "ada" })).await;
    assert_eq!(st, 201);
    assert_eq!(v["challenge"]["round"], 1);
    assert_eq!(v["challenge"]["template"], json!(to_graph_text(&TopsnutGpw::unlabelled(Graph::path(4)))));
    let id = v["session"]["session_id"].as_str().unwrap().to_string();
    let rounds = format!("/sessions/{id}/rounds");

    // malformed keys are refused without using up the attempt
    let unlabelled = TopsnutGpw::unlabelled(Graph::path(4));
    assert_eq!(server.post(&rounds, envelope(&unlabelled, "free")).await.0, 400);
    assert_eq!(server.post(&rounds, json!({ "graph": "not a graph" })).await.0, 400);
    assert_eq!(server.post(&rounds, envelope(&key(), "bogus")).await.0, 400);

    let (st, v) = server.post(&rounds, envelope(&key(), "twin-odd-graceful")).await;
    assert_eq!(st, 200);
    assert_eq!(v["outcome"], "accepted");
    assert_eq!(v["session"]["attempts"], 1);
    assert_eq!(v["session"]["state"], "accepted");
    assert!(v["challenge"].is_null());

    assert_eq!(server.post(&rounds, envelope(&key(), "twin-odd-graceful")).await.0, 409);
}

#[tokio::test]
async fn rejection_closes_the_session() {
    let (server, svc) = fresh().await;
    let (_, v) = server.post("/sessions", json!({ "user_id": "ada" })).await;
    let id = v["session"]["session_id"].as_str().unwrap().to_string();
    let wrong = labelled(Graph::path(4), &[0, 5, 4, 1], Rule::Free);
    let (st, v) = server.post(&format!("/sessions/{id}/rounds"), envelope(&wrong, "free")).await;
    assert_eq!(st, 200);
    assert_eq!(v["outcome"], "rejected");
    assert_eq!(svc.session(&id).unwrap().attempts, 1);
    assert_eq!(server.post(&format!("/sessions/{id}/rounds"), envelope(&key(), "free")).await.0, 409);
}

#[tokio::test]
async fn concurrent_sessions_are_independent() {
    let (server, _) = fresh().await;
    let server = Arc::new(server);
    let mut tasks = Vec::new();
    for i in 0..16 {
        let server = server.clone();
        tasks.push(tokio::spawn(async move {
            let (_, v) = server.post("/sessions", json!({ "user_id": "ada" })).await;
            let id = v["session"]["session_id"].as_str().unwrap().to_string();
            let k = if i % 2 == 0 { key() } else { labelled(Graph::path(4), &[0, 1, 2, 3], Rule::Free) };
            let (_, v) = server.post(&format!("/sessions/{id}/rounds"), envelope(&k, "free")).await;
            (i, v["outcome"].as_str().unwrap().to_string())
        }));
    }
    for t in tasks {
        let (i, outcome) = t.await.unwrap();
        assert_eq!(outcome, if i % 2 == 0 { "accepted" } else { "rejected" });
    }
}
