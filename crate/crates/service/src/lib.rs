//! JSON-over-HTTP access to frameworks, facet reports, significance tables
//! and navigation sessions.
//!
//! Everything lives in memory and is lost on restart. Ids are random hex
//! tokens. Computations run on the blocking pool and stop at the
//! configured deadline; an interrupted computation answers `202 Accepted`
//! with whatever partial state it reached.
//!
//! | method | path | body / query |
//! |---|---|---|
//! | GET | `/health` | |
//! | POST | `/frameworks` | `{format, text, name?}` |
//! | GET | `/frameworks`, `/frameworks/{id}` | |
//! | GET | `/frameworks/{id}/extensions` | `semantics`, `max_models` |
//! | GET | `/frameworks/{id}/facets` | `semantics` |
//! | GET | `/frameworks/{id}/significance` | `semantics` |
//! | POST | `/sessions` | `{framework_id, semantics}` |
//! | GET | `/sessions/{id}` | |
//! | POST | `/sessions/{id}/approve` | `{argument, polarity?}` |
//! | POST | `/sessions/{id}/undo` | |

use std::future::Future;
use std::sync::Arc;
use std::time::Duration;

use axum::routing::{get, post};
use axum::Router;
use tokio::net::TcpListener;
use tower_http::cors::{Any, CorsLayer};

mod error;
pub mod routes;
pub mod store;
pub mod views;

pub use error::ApiError;
pub use store::Store;

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    /// Per-request computation budget. `None` means unlimited.
    pub deadline: Option<Duration>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            deadline: Some(Duration::from_secs(60)),
        }
    }
}

#[derive(Clone)]
pub struct AppState {
    pub store: Arc<Store>,
    pub config: ServiceConfig,
}

impl AppState {
    pub fn new(config: ServiceConfig) -> Self {
        AppState {
            store: Arc::new(Store::default()),
            config,
        }
    }
}

pub fn router(state: AppState) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods(Any)
        .allow_headers(Any);
    Router::new()
        .route("/health", get(routes::health))
        .route(
            "/frameworks",
            get(routes::list_frameworks).post(routes::upload),
        )
        .route("/frameworks/{id}", get(routes::get_framework))
        .route("/frameworks/{id}/extensions", get(routes::extensions))
        .route("/frameworks/{id}/facets", get(routes::facets))
        .route("/frameworks/{id}/significance", get(routes::significance))
        .route("/sessions", post(routes::create_session))
        .route("/sessions/{id}", get(routes::get_session))
        .route("/sessions/{id}/approve", post(routes::approve))
        .route("/sessions/{id}/undo", post(routes::undo))
        .layer(cors)
        .with_state(state)
}

/// Serves until `shutdown` resolves, then drains open connections.
pub async fn serve(
    listener: TcpListener,
    state: AppState,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    tracing::info!(addr = ?listener.local_addr()?, "serving");
    axum::serve(listener, router(state))
        .with_graceful_shutdown(shutdown)
        .await
}

/// Resolves on Ctrl-C.
pub async fn ctrl_c() {
    if tokio::signal::ctrl_c().await.is_err() {
        std::future::pending::<()>().await;
    }
}
