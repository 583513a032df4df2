use std::sync::Arc;
use std::time::Duration;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use argfacets::fixtures::ex1;
use argfacets::{
    facet_report, render_framework, significance_table, Constraints, Format, Literal,
    NavigationSession, Semantics,
};
use argfacets_service::views::{FacetReportView, SignificanceView};
use argfacets_service::{router, AppState, ServiceConfig};

fn app() -> Router {
    router(AppState::new(ServiceConfig::default()))
}

async fn call(app: &Router, method: Method, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    let body = match body {
        Some(v) => {
            req = req.header("content-type", "application/json");
            Body::from(v.to_string())
        }
        None => Body::empty(),
    };
    let resp = app.clone().oneshot(req.body(body).unwrap()).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap()
    };
    (status, value)
}

async fn upload_ex1(app: &Router) -> String {
    let text = render_framework(&ex1(), Format::Apx);
    let (status, body) = call(
        app,
        Method::POST,
        "/frameworks",
        Some(json!({ "format": "apx", "text": text, "name": "ex1" })),
    )
    .await;
    assert_eq!(status, StatusCode::CREATED);
    assert_eq!(body["arguments"], 7);
    assert_eq!(body["attacks"], 10);
    body["id"].as_str().unwrap().to_string()
}

async fn new_session(app: &Router, framework: &str, semantics: &str) -> String {
    let (status, body) = call(
        app,
        Method::POST,
        "/sessions",
        Some(json!({ "framework_id": framework, "semantics": semantics })),
    )
    .await;
    assert_eq!(status, StatusCode::CREATED, "{body}");
    body["id"].as_str().unwrap().to_string()
}

fn names(v: &Value) -> Vec<&str> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect()
}

#[tokio::test]
async fn health() {
    let (status, body) = call(&app(), Method::GET, "/health", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, json!({ "status": "ok" }));
}

#[tokio::test]
async fn ex1_facets_and_extensions() {
    let app = app();
    let id = upload_ex1(&app).await;

    let (status, body) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{id}/facets?semantics=stab"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(names(&body["facets"]), ["b", "m", "p", "s", "t", "w"]);
    assert_eq!(body["count"], 6);

    let (_, body) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{id}/extensions?semantics=stab"),
        None,
    )
    .await;
    assert_eq!(body["extensions"].as_array().unwrap().len(), 3);
    assert_eq!(body["exhausted"], true);
    let (_, body) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{id}/extensions?semantics=stab&max_models=1"),
        None,
    )
    .await;
    assert_eq!(body["extensions"].as_array().unwrap().len(), 1);
    assert_eq!(body["exhausted"], false);

    let (_, body) = call(&app, Method::GET, &format!("/frameworks/{id}"), None).await;
    assert_eq!(
        names(&body["arguments"]),
        ["w", "s", "b", "m", "t", "e", "p"]
    );
    assert_eq!(body["attacks"][0], json!(["w", "s"]));

    let (_, list) = call(&app, Method::GET, "/frameworks", None).await;
    assert_eq!(list.as_array().unwrap().len(), 1);
}

#[tokio::test]
async fn significance_scores_are_exact() {
    let app = app();
    let id = upload_ex1(&app).await;
    let (status, body) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{id}/significance?semantics=stab"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["facet_count"], 6);
    let entries = body["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 12);
    assert_eq!(entries[0]["literal"], "w");
    assert_eq!(entries[0]["score"], json!({ "num": 1, "den": 1 }));
    let two_thirds = entries.iter().find(|e| e["literal"] == "s").unwrap();
    assert_eq!(two_thirds["score"], json!({ "num": 2, "den": 3 }));
    assert_eq!(two_thirds["remaining_facets"], 2);
    assert!((two_thirds["decimal"].as_f64().unwrap() - 2.0 / 3.0).abs() < 1e-12);
}

#[tokio::test]
async fn payloads_equal_direct_calls() {
    let app = app();
    let id = upload_ex1(&app).await;
    let af = ex1();
    for s in Semantics::ALL {
        let (_, body) = call(
            &app,
            Method::GET,
            &format!("/frameworks/{id}/facets?semantics={s}"),
            None,
        )
        .await;
        let wire: FacetReportView = serde_json::from_value(body).unwrap();
        let direct = facet_report(&af, s, &Constraints::none());
        assert_eq!(wire, FacetReportView::new(&af, &direct), "{s}");

        let (_, body) = call(
            &app,
            Method::GET,
            &format!("/frameworks/{id}/significance?semantics={s}"),
            None,
        )
        .await;
        let wire: Vec<SignificanceView> = serde_json::from_value(body["entries"].clone()).unwrap();
        assert_eq!(
            wire,
            SignificanceView::table(&af, &significance_table(&af, s)),
            "{s}"
        );
    }
}

#[tokio::test]
async fn session_approve_and_undo() {
    let app = app();
    let fid = upload_ex1(&app).await;
    let sid = new_session(&app, &fid, "stab").await;

    let (status, state) = call(&app, Method::GET, &format!("/sessions/{sid}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(state["facets"].as_array().unwrap().len(), 6);
    assert_eq!(state["significance"].as_array().unwrap().len(), 12);

    let (status, state) = call(
        &app,
        Method::POST,
        &format!("/sessions/{sid}/approve"),
        Some(json!({ "argument": "s", "polarity": "approve" })),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(names(&state["facets"]), ["p", "t"]);
    assert_eq!(names(&state["history"]), ["s"]);
    let sample = names(&state["sample_extension"]);
    assert!(sample.contains(&"s"));

    let (status, state) = call(
        &app,
        Method::POST,
        &format!("/sessions/{sid}/approve"),
        Some(json!({ "argument": "p", "polarity": "disapprove" })),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(names(&state["history"]), ["s", "-p"]);
    assert!(state["facets"].as_array().unwrap().is_empty());
    assert_eq!(names(&state["sample_extension"]), ["b", "s", "t"]);

    let (_, state) = call(&app, Method::POST, &format!("/sessions/{sid}/undo"), None).await;
    assert_eq!(names(&state["facets"]), ["p", "t"]);
    let (_, state) = call(&app, Method::POST, &format!("/sessions/{sid}/undo"), None).await;
    assert_eq!(state["facets"].as_array().unwrap().len(), 6);
    let (status, _) = call(&app, Method::POST, &format!("/sessions/{sid}/undo"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
}

#[tokio::test]
async fn approving_w_empties_the_panel() {
    let app = app();
    let fid = upload_ex1(&app).await;
    let sid = new_session(&app, &fid, "stab").await;
    let (_, state) = call(
        &app,
        Method::POST,
        &format!("/sessions/{sid}/approve"),
        Some(json!({ "argument": "w" })),
    )
    .await;
    assert!(state["facets"].as_array().unwrap().is_empty());
    assert!(state["significance"].as_array().unwrap().is_empty());
}

#[tokio::test]
async fn error_statuses() {
    let app = app();
    let fid = upload_ex1(&app).await;
    let sid = new_session(&app, &fid, "stab").await;

    let (status, _) = call(
        &app,
        Method::POST,
        &format!("/sessions/{sid}/approve"),
        Some(json!({ "argument": "e" })),
    )
    .await;
    assert_eq!(status, StatusCode::CONFLICT);
    let (status, _) = call(
        &app,
        Method::POST,
        &format!("/sessions/{sid}/approve"),
        Some(json!({ "argument": "zz" })),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    let (status, _) = call(
        &app,
        Method::POST,
        &format!("/sessions/{sid}/approve"),
        Some(json!({ "polarity": "approve" })),
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);

    for uri in [
        "/frameworks/nope",
        "/frameworks/nope/facets?semantics=stab",
        "/sessions/nope",
    ] {
        let (status, _) = call(&app, Method::GET, uri, None).await;
        assert_eq!(status, StatusCode::NOT_FOUND, "{uri}");
    }
    let (status, _) = call(
        &app,
        Method::POST,
        "/sessions",
        Some(json!({ "framework_id": "nope", "semantics": "stab" })),
    )
    .await;
    assert_eq!(status, StatusCode::NOT_FOUND);

    let (status, _) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{fid}/facets?semantics=xyz"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{fid}/facets"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);

    let (status, _) = call(
        &app,
        Method::POST,
        "/frameworks",
        Some(json!({ "format": "apx", "text": "arg(a).\natt(a,b)." })),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);

    let req = Request::builder()
        .method(Method::POST)
        .uri("/frameworks")
        .header("content-type", "application/json")
        .body(Body::from("{not json"))
        .unwrap();
    assert_eq!(
        app.clone().oneshot(req).await.unwrap().status(),
        StatusCode::BAD_REQUEST
    );
}

#[tokio::test]
async fn budget_exceeded_is_reported() {
    let app = router(AppState::new(ServiceConfig {
        deadline: Some(Duration::ZERO),
    }));
    let id = upload_ex1(&app).await;
    let (status, body) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{id}/facets?semantics=pref"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::ACCEPTED);
    assert_eq!(body["status"], "budget_exceeded");
    assert_eq!(body["exhausted"], false);
    assert_eq!(body["stage"], "credulous");

    let (status, body) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{id}/extensions?semantics=stab"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::ACCEPTED);
    assert_eq!(body["timed_out"], true);

    // closed forms need no search and still answer
    let (status, _) = call(
        &app,
        Method::GET,
        &format!("/frameworks/{id}/facets?semantics=cnf"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::OK);
}

#[tokio::test]
async fn cors_headers_present() {
    let req = Request::builder()
        .uri("/health")
        .header("origin", "http://localhost:5173")
        .body(Body::empty())
        .unwrap();
    let resp = app().oneshot(req).await.unwrap();
    assert_eq!(resp.headers()["access-control-allow-origin"], "*");
}

#[tokio::test]
async fn example_directory_is_listable() {
    let state = AppState::new(ServiceConfig::default());
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../instances");
    let failures = state.store.load_dir(std::path::Path::new(dir)).unwrap();
    assert!(failures.is_empty());
    let app = router(state);
    let (_, list) = call(&app, Method::GET, "/frameworks", None).await;
    let listed: Vec<&str> = list
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["name"].as_str().unwrap())
        .collect();
    assert_eq!(listed, ["ex1.apx", "fx.apx", "fxx.apx"]);
}

/// Interleaved approve/undo on ten sessions ends in the same states as a
/// serial replay of each session's own script.
#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn concurrent_sessions_are_isolated() {
    let app = app();
    let fid = upload_ex1(&app).await;
    let scripts: Vec<Vec<(&str, &str)>> = (0..10)
        .map(|i| match i % 4 {
            0 => vec![
                ("approve", "s"),
                ("approve", "p"),
                ("undo", ""),
                ("approve", "t"),
            ],
            1 => vec![("approve", "w"), ("undo", ""), ("disapprove", "w")],
            2 => vec![
                ("disapprove", "t"),
                ("undo", ""),
                ("disapprove", "m"),
                ("undo", ""),
            ],
            _ => vec![("approve", "b"), ("disapprove", "p")],
        })
        .collect();

    let mut handles = Vec::new();
    for script in scripts.clone() {
        let app = app.clone();
        let fid = fid.clone();
        handles.push(tokio::spawn(async move {
            let sid = new_session(&app, &fid, "stab").await;
            for (op, arg) in script {
                let (status, _) = if op == "undo" {
                    call(&app, Method::POST, &format!("/sessions/{sid}/undo"), None).await
                } else {
                    call(
                        &app,
                        Method::POST,
                        &format!("/sessions/{sid}/approve"),
                        Some(json!({ "argument": arg, "polarity": op })),
                    )
                    .await
                };
                assert_eq!(status, StatusCode::OK);
                tokio::task::yield_now().await;
            }
            let (_, state) = call(&app, Method::GET, &format!("/sessions/{sid}"), None).await;
            state
        }));
    }

    let af = Arc::new(ex1());
    for (handle, script) in handles.into_iter().zip(scripts) {
        let state = handle.await.unwrap();
        let mut serial = NavigationSession::new(af.clone(), Semantics::Stab);
        for (op, arg) in script {
            match op {
                "undo" => {
                    serial.undo().unwrap();
                }
                "approve" => {
                    serial
                        .approve(Literal::approve(af.index_of(arg).unwrap()))
                        .unwrap();
                }
                _ => {
                    serial
                        .approve(Literal::disapprove(af.index_of(arg).unwrap()))
                        .unwrap();
                }
            }
        }
        assert_eq!(names(&state["facets"]), af.sorted_names_of(serial.facets()));
        let history: Vec<String> = serial
            .history()
            .iter()
            .map(|l| l.display(&af).to_string())
            .collect();
        assert_eq!(names(&state["history"]), history);
    }
}
