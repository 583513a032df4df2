use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex, RwLock};

use argfacets::{parse_framework, ArgumentationFramework, Format, NavigationSession};

use crate::views::FrameworkHandle;

pub struct StoredFramework {
    pub id: String,
    pub name: String,
    pub framework: Arc<ArgumentationFramework>,
}

impl StoredFramework {
    pub fn handle(&self) -> FrameworkHandle {
        FrameworkHandle {
            id: self.id.clone(),
            name: self.name.clone(),
            arguments: self.framework.len(),
            attacks: self.framework.attacks().len(),
        }
    }
}

pub struct StoredSession {
    pub id: String,
    pub framework_id: String,
    pub session: NavigationSession,
}

/// In-memory registry. Nothing survives a restart.
#[derive(Default)]
pub struct Store {
    frameworks: RwLock<HashMap<String, Arc<StoredFramework>>>,
    sessions: RwLock<HashMap<String, Arc<Mutex<StoredSession>>>>,
}

fn token() -> String {
    format!("{:016x}", rand::random::<u64>())
}

impl Store {
    pub fn add_framework(
        &self,
        name: String,
        framework: ArgumentationFramework,
    ) -> Arc<StoredFramework> {
        let mut map = self.frameworks.write().unwrap();
        let id = loop {
            let id = token();
            if !map.contains_key(&id) {
                break id;
            }
        };
        let stored = Arc::new(StoredFramework {
            id: id.clone(),
            name,
            framework: Arc::new(framework),
        });
        map.insert(id, stored.clone());
        stored
    }

    pub fn framework(&self, id: &str) -> Option<Arc<StoredFramework>> {
        self.frameworks.read().unwrap().get(id).cloned()
    }

    /// Handles sorted by name, then id.
    pub fn frameworks(&self) -> Vec<FrameworkHandle> {
        let mut out: Vec<_> = self
            .frameworks
            .read()
            .unwrap()
            .values()
            .map(|f| f.handle())
            .collect();
        out.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.id.cmp(&b.id)));
        out
    }

    pub fn add_session(
        &self,
        framework_id: String,
        session: NavigationSession,
    ) -> Arc<Mutex<StoredSession>> {
        let mut map = self.sessions.write().unwrap();
        let id = loop {
            let id = token();
            if !map.contains_key(&id) {
                break id;
            }
        };
        let stored = Arc::new(Mutex::new(StoredSession {
            id: id.clone(),
            framework_id,
            session,
        }));
        map.insert(id, stored.clone());
        stored
    }

    pub fn session(&self, id: &str) -> Option<Arc<Mutex<StoredSession>>> {
        self.sessions.read().unwrap().get(id).cloned()
    }

    /// Loads every file in `dir` with a known framework extension. Files
    /// that fail to parse are skipped and reported in the returned list.
    pub fn load_dir(&self, dir: &Path) -> std::io::Result<Vec<(String, String)>> {
        let mut entries: Vec<_> = std::fs::read_dir(dir)?
            .filter_map(Result::ok)
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect();
        entries.sort();
        let mut failures = Vec::new();
        for path in entries {
            let Some(format) = Format::from_path(&path) else {
                continue;
            };
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let text = std::fs::read_to_string(&path)?;
            match parse_framework(&text, format) {
                Ok(af) => {
                    self.add_framework(name, af);
                }
                Err(e) => failures.push((name, e.to_string())),
            }
        }
        Ok(failures)
    }
}
