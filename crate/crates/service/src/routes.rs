use std::sync::Arc;
use std::time::Instant;

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::Json;
use serde::Deserialize;
use serde_json::{json, Value};

use argfacets::facets::{closed_form_facets, significance_table_within};
use argfacets::{
    facet_report, ArgumentationFramework, Budget, Constraints, FacetError, FacetReport, Format,
    Literal, NavigationSession, Semantics, Solver,
};

use crate::error::ApiError;
use crate::store::{StoredFramework, StoredSession};
use crate::views::{
    literal_names, sorted_names, ApproveRequest, BudgetExceeded, ExtensionsView, FacetReportView,
    FrameworkHandle, FrameworkView, NewSessionRequest, SessionHandle, SessionStateView,
    SignificanceTableView, SignificanceView, UploadRequest,
};
use crate::AppState;

type ApiResult<T> = Result<T, ApiError>;

#[derive(Debug, Deserialize)]
pub struct SemanticsQuery {
    semantics: String,
    max_models: Option<usize>,
}

fn parse_semantics(s: &str) -> ApiResult<Semantics> {
    s.parse()
        .map_err(|e: argfacets::semantics::UnknownSemantics| ApiError::BadRequest(e.to_string()))
}

fn framework(state: &AppState, id: &str) -> ApiResult<Arc<StoredFramework>> {
    state
        .store
        .framework(id)
        .ok_or_else(|| ApiError::NotFound(format!("no framework with id {id}")))
}

fn session(state: &AppState, id: &str) -> ApiResult<Arc<std::sync::Mutex<StoredSession>>> {
    state
        .store
        .session(id)
        .ok_or_else(|| ApiError::NotFound(format!("no session with id {id}")))
}

fn deadline(state: &AppState) -> Option<Instant> {
    state.config.deadline.map(|d| Instant::now() + d)
}

async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> ApiResult<T> + Send + 'static,
) -> ApiResult<T> {
    tokio::task::spawn_blocking(f).await?
}

/// Facet report that names the narrowing loop a deadline interrupted.
pub fn report_within(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
    deadline: Option<Instant>,
) -> ApiResult<FacetReport> {
    if c.is_empty() && closed_form_facets(af, semantics).is_some() {
        return Ok(facet_report(af, semantics, c));
    }
    let solver = Solver::new(af, semantics).with_deadline(deadline);
    let cred = solver.credulous(c).map_err(|e| {
        ApiError::Budget(BudgetExceeded::new(
            af,
            Some("credulous"),
            e.partial.as_ref(),
        ))
    })?;
    let skep = solver.skeptical(c).map_err(|e| {
        ApiError::Budget(BudgetExceeded::new(
            af,
            Some("skeptical"),
            e.partial.as_ref(),
        ))
    })?;
    Ok(FacetReport {
        semantics,
        constraints: c.clone(),
        facets: cred.difference(&skep),
        cred,
        skep,
    })
}

fn facet_error(af: &ArgumentationFramework, e: FacetError) -> ApiError {
    match e {
        FacetError::NotAFacet(name) => ApiError::Conflict(format!("{name} is not a current facet")),
        FacetError::EmptyHistory => ApiError::Conflict("nothing to undo".into()),
        FacetError::OutOfRange(a) => ApiError::Unprocessable(format!("argument {a} out of range")),
        FacetError::Deadline(d) => {
            ApiError::Budget(BudgetExceeded::new(af, None, d.partial.as_ref()))
        }
    }
}

/// Full view of a session. The flag is false when the deadline cut the
/// significance table or the sample extension short.
fn session_state(stored: &StoredSession, deadline: Option<Instant>) -> (bool, SessionStateView) {
    let s = &stored.session;
    let af = s.framework();
    let significance = s.significance_within(deadline).ok();
    let sample = s.sample_extension(deadline);
    let complete = significance.is_some() && sample.is_ok();
    let view = SessionStateView {
        id: stored.id.clone(),
        framework_id: stored.framework_id.clone(),
        semantics: s.semantics(),
        history: literal_names(af, s.history()),
        facets: sorted_names(af, s.facets()),
        significance: significance.map(|t| SignificanceView::table(af, &t)),
        sample_extension: sample.ok().flatten().map(|e| sorted_names(af, &e)),
    };
    (complete, view)
}

fn state_response(complete: bool, view: SessionStateView) -> (StatusCode, Json<SessionStateView>) {
    let status = if complete {
        StatusCode::OK
    } else {
        StatusCode::ACCEPTED
    };
    (status, Json(view))
}

pub async fn health() -> Json<Value> {
    Json(json!({ "status": "ok" }))
}

pub async fn upload(
    State(state): State<AppState>,
    body: Result<Json<UploadRequest>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<FrameworkHandle>)> {
    let Json(req) = body?;
    let format: Format = req
        .format
        .parse()
        .map_err(|e: argfacets::ParseError| ApiError::Unprocessable(e.to_string()))?;
    let af = argfacets::parse_framework(&req.text, format)
        .map_err(|e| ApiError::Unprocessable(e.to_string()))?;
    let name = req
        .name
        .unwrap_or_else(|| format!("upload.{}", format.extension()));
    let stored = state.store.add_framework(name, af);
    Ok((StatusCode::CREATED, Json(stored.handle())))
}

pub async fn list_frameworks(State(state): State<AppState>) -> Json<Vec<FrameworkHandle>> {
    Json(state.store.frameworks())
}

pub async fn get_framework(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> ApiResult<Json<FrameworkView>> {
    let f = framework(&state, &id)?;
    Ok(Json(FrameworkView::new(&f.id, &f.name, &f.framework)))
}

pub async fn extensions(
    State(state): State<AppState>,
    Path(id): Path<String>,
    query: Result<Query<SemanticsQuery>, QueryRejection>,
) -> ApiResult<(StatusCode, Json<ExtensionsView>)> {
    let Query(q) = query?;
    let semantics = parse_semantics(&q.semantics)?;
    let f = framework(&state, &id)?;
    let budget = Budget {
        max_models: q.max_models,
        timeout: state.config.deadline,
    };
    blocking(move || {
        let result = argfacets::enumerate(&f.framework, semantics, &Constraints::none(), &budget);
        let status = if result.timed_out {
            StatusCode::ACCEPTED
        } else {
            StatusCode::OK
        };
        Ok((
            status,
            Json(ExtensionsView::new(&f.framework, semantics, &result)),
        ))
    })
    .await
}

pub async fn facets(
    State(state): State<AppState>,
    Path(id): Path<String>,
    query: Result<Query<SemanticsQuery>, QueryRejection>,
) -> ApiResult<Json<FacetReportView>> {
    let Query(q) = query?;
    let semantics = parse_semantics(&q.semantics)?;
    let f = framework(&state, &id)?;
    let deadline = deadline(&state);
    blocking(move || {
        let report = report_within(&f.framework, semantics, &Constraints::none(), deadline)?;
        Ok(Json(FacetReportView::new(&f.framework, &report)))
    })
    .await
}

pub async fn significance(
    State(state): State<AppState>,
    Path(id): Path<String>,
    query: Result<Query<SemanticsQuery>, QueryRejection>,
) -> ApiResult<Json<SignificanceTableView>> {
    let Query(q) = query?;
    let semantics = parse_semantics(&q.semantics)?;
    let f = framework(&state, &id)?;
    let deadline = deadline(&state);
    blocking(move || {
        let af = &f.framework;
        let none = Constraints::none();
        let report = report_within(af, semantics, &none, deadline)?;
        let table = significance_table_within(af, semantics, &none, &report.facets, deadline)
            .map_err(|_| ApiError::Budget(BudgetExceeded::new(af, Some("significance"), None)))?;
        Ok(Json(SignificanceTableView {
            semantics,
            facet_count: report.facets.len(),
            entries: SignificanceView::table(af, &table),
        }))
    })
    .await
}

pub async fn create_session(
    State(state): State<AppState>,
    body: Result<Json<NewSessionRequest>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<SessionHandle>)> {
    let Json(req) = body?;
    let semantics = parse_semantics(&req.semantics)?;
    let f = framework(&state, &req.framework_id)?;
    let deadline = deadline(&state);
    let session = blocking({
        let af = f.framework.clone();
        move || {
            NavigationSession::new_within(af.clone(), semantics, deadline)
                .map_err(|e| ApiError::Budget(BudgetExceeded::new(&af, None, e.partial.as_ref())))
        }
    })
    .await?;
    let stored = state.store.add_session(f.id.clone(), session);
    let id = stored.lock().unwrap().id.clone();
    Ok((
        StatusCode::CREATED,
        Json(SessionHandle {
            id,
            framework_id: f.id.clone(),
            semantics,
            history_len: 0,
        }),
    ))
}

pub async fn get_session(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> ApiResult<(StatusCode, Json<SessionStateView>)> {
    let s = session(&state, &id)?;
    let deadline = deadline(&state);
    blocking(move || {
        let guard = s.lock().unwrap();
        let (complete, view) = session_state(&guard, deadline);
        Ok(state_response(complete, view))
    })
    .await
}

pub async fn approve(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Result<Json<ApproveRequest>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<SessionStateView>)> {
    let Json(req) = body?;
    let s = session(&state, &id)?;
    let deadline = deadline(&state);
    blocking(move || {
        let mut guard = s.lock().unwrap();
        let af = guard.session.framework().clone();
        let argument = af
            .index_of(&req.argument)
            .ok_or_else(|| ApiError::Unprocessable(format!("unknown argument {}", req.argument)))?;
        let lit = Literal {
            argument,
            polarity: req.polarity,
        };
        guard
            .session
            .approve_within(lit, deadline)
            .map_err(|e| facet_error(&af, e))?;
        let (complete, view) = session_state(&guard, deadline);
        Ok(state_response(complete, view))
    })
    .await
}

pub async fn undo(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> ApiResult<(StatusCode, Json<SessionStateView>)> {
    let s = session(&state, &id)?;
    let deadline = deadline(&state);
    blocking(move || {
        let mut guard = s.lock().unwrap();
        let af = guard.session.framework().clone();
        guard.session.undo().map_err(|e| facet_error(&af, e))?;
        let (complete, view) = session_state(&guard, deadline);
        Ok(state_response(complete, view))
    })
    .await
}
