//! Wire representations. Arguments travel by name, never by index.

use argfacets::{
    ArgumentSet, ArgumentationFramework, EnumerationResult, FacetReport, Literal, Polarity, Ratio,
    Semantics, SignificanceEntry,
};
use serde::{Deserialize, Serialize};

pub fn sorted_names(af: &ArgumentationFramework, set: &ArgumentSet) -> Vec<String> {
    af.sorted_names_of(set)
        .into_iter()
        .map(str::to_string)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameworkHandle {
    pub id: String,
    pub name: String,
    pub arguments: usize,
    pub attacks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameworkView {
    pub id: String,
    pub name: String,
    pub arguments: Vec<String>,
    pub attacks: Vec<(String, String)>,
}

impl FrameworkView {
    pub fn new(id: &str, name: &str, af: &ArgumentationFramework) -> Self {
        FrameworkView {
            id: id.to_string(),
            name: name.to_string(),
            arguments: af.names().to_vec(),
            attacks: af
                .attacks()
                .iter()
                .map(|&(f, t)| (af.name(f).to_string(), af.name(t).to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionsView {
    pub semantics: Semantics,
    pub extensions: Vec<Vec<String>>,
    pub exhausted: bool,
    pub timed_out: bool,
}

impl ExtensionsView {
    pub fn new(
        af: &ArgumentationFramework,
        semantics: Semantics,
        result: &EnumerationResult,
    ) -> Self {
        let mut extensions: Vec<Vec<String>> = result
            .extensions
            .iter()
            .map(|e| sorted_names(af, e))
            .collect();
        extensions.sort();
        ExtensionsView {
            semantics,
            extensions,
            exhausted: result.exhausted,
            timed_out: result.timed_out,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetReportView {
    pub semantics: Semantics,
    pub cred: Vec<String>,
    pub skep: Vec<String>,
    pub facets: Vec<String>,
    pub count: usize,
}

impl FacetReportView {
    pub fn new(af: &ArgumentationFramework, report: &FacetReport) -> Self {
        FacetReportView {
            semantics: report.semantics,
            cred: sorted_names(af, &report.cred),
            skep: sorted_names(af, &report.skep),
            facets: sorted_names(af, &report.facets),
            count: report.facets.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactScore {
    pub num: u64,
    pub den: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignificanceView {
    /// `name` or `-name`.
    pub literal: String,
    pub argument: String,
    pub polarity: Polarity,
    pub remaining_facets: usize,
    pub score: ExactScore,
    pub decimal: f64,
}

impl SignificanceView {
    pub fn new(af: &ArgumentationFramework, entry: &SignificanceEntry) -> Self {
        let score: Ratio<u64> = entry.score;
        SignificanceView {
            literal: entry.literal.display(af).to_string(),
            argument: af.name(entry.literal.argument).to_string(),
            polarity: entry.literal.polarity,
            remaining_facets: entry.remaining_facets,
            score: ExactScore {
                num: *score.numer(),
                den: *score.denom(),
            },
            decimal: *score.numer() as f64 / *score.denom() as f64,
        }
    }

    pub fn table(af: &ArgumentationFramework, entries: &[SignificanceEntry]) -> Vec<Self> {
        entries.iter().map(|e| Self::new(af, e)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionHandle {
    pub id: String,
    pub framework_id: String,
    pub semantics: Semantics,
    pub history_len: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionStateView {
    pub id: String,
    pub framework_id: String,
    pub semantics: Semantics,
    pub history: Vec<String>,
    pub facets: Vec<String>,
    /// Absent when the deadline hit before the table was complete.
    pub significance: Option<Vec<SignificanceView>>,
    pub sample_extension: Option<Vec<String>>,
}

pub fn literal_names(af: &ArgumentationFramework, history: &[Literal]) -> Vec<String> {
    history.iter().map(|l| l.display(af).to_string()).collect()
}

/// Body of a 202 response: the computation ran out of time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetExceeded {
    pub status: String,
    pub exhausted: bool,
    /// Which narrowing loop was interrupted: `credulous` or `skeptical`.
    pub stage: Option<String>,
    /// Bound reached so far: a lower bound on the credulous set or an
    /// upper bound on the skeptical set.
    pub partial: Option<Vec<String>>,
}

impl BudgetExceeded {
    pub fn new(
        af: &ArgumentationFramework,
        stage: Option<&str>,
        partial: Option<&ArgumentSet>,
    ) -> Self {
        BudgetExceeded {
            status: "budget_exceeded".to_string(),
            exhausted: false,
            stage: stage.map(str::to_string),
            partial: partial.map(|p| sorted_names(af, p)),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct UploadRequest {
    pub format: String,
    pub text: String,
    #[serde(default)]
    pub name: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct NewSessionRequest {
    pub framework_id: String,
    pub semantics: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ApproveRequest {
    pub argument: String,
    #[serde(default = "approve")]
    pub polarity: Polarity,
}

fn approve() -> Polarity {
    Polarity::Approve
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignificanceTableView {
    pub semantics: Semantics,
    pub facet_count: usize,
    pub entries: Vec<SignificanceView>,
}
