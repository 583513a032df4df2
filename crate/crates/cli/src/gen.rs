//! Instance generators. Every output starts with a `%` comment carrying a
//! JSON manifest, so the file stays valid APX.

use std::path::Path;

use anyhow::{bail, Context, Result};
use argfacets::fixtures::pairs;
use argfacets::reductions::{
    copy_gadget, duplicate_argument, expected_translation_facets, guard_satisfiable, parse_dimacs,
    parse_qdimacs_ae, qbf_reduction, random_af, satunsat_instance, standard_translation,
};
use argfacets::{render_framework, ArgumentationFramework, Format};
use serde_json::{json, Value};

use crate::load_framework;

pub struct Generated {
    pub framework: ArgumentationFramework,
    pub manifest: Value,
}

impl Generated {
    /// APX text with the manifest on the first line.
    pub fn render(&self) -> String {
        format!(
            "% {}\n{}",
            self.manifest,
            render_framework(&self.framework, Format::Apx)
        )
    }
}

fn manifest(generator: &str, params: Value, af: &ArgumentationFramework, expected: Value) -> Value {
    json!({
        "generator": generator,
        "params": params,
        "arguments": af.len(),
        "attacks": af.attacks().len(),
        "expected": expected,
    })
}

fn per_semantics(count: Option<usize>) -> Value {
    match count {
        Some(k) => json!({ "adm": k, "comp": k, "stab": k }),
        None => Value::Null,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn std_translation(dimacs: &Path) -> Result<Generated> {
    let phi =
        parse_dimacs(&read(dimacs)?).with_context(|| format!("parsing {}", dimacs.display()))?;
    let af = standard_translation(&phi);
    let expected = json!({
        "satisfiable": phi.is_satisfiable(),
        "facets": per_semantics(expected_translation_facets(&phi)),
    });
    let m = manifest(
        "std-translation",
        json!({ "dimacs": dimacs }),
        &af,
        expected,
    );
    Ok(Generated {
        framework: af,
        manifest: m,
    })
}

fn argument(af: &ArgumentationFramework, name: &str) -> Result<usize> {
    af.index_of(name)
        .with_context(|| format!("no argument named {name}"))
}

pub fn duplicate(path: &Path, arg: &str) -> Result<Generated> {
    let af = load_framework(path, None)?;
    let a = argument(&af, arg)?;
    let out = duplicate_argument(&af, a);
    let expected = json!({ "facet": arg, "facet_iff": "credulous in the input" });
    let m = manifest(
        "duplicate",
        json!({ "af": path, "arg": arg }),
        &out,
        expected,
    );
    Ok(Generated {
        framework: out,
        manifest: m,
    })
}

pub fn copies(path: &Path, arg: &str, n: usize) -> Result<Generated> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let af = load_framework(path, None)?;
    let a = argument(&af, arg)?;
    let out = copy_gadget(&af, a, n);
    let expected =
        json!({ "copies_of": arg, "facet_iff": "facet in the input (pref, semi, stag)" });
    let m = manifest(
        "copies",
        json!({ "af": path, "arg": arg, "n": n }),
        &out,
        expected,
    );
    Ok(Generated {
        framework: out,
        manifest: m,
    })
}

pub fn satunsat(phi_path: &Path, psi_path: &Path) -> Result<Generated> {
    let phi = parse_dimacs(&read(phi_path)?)
        .with_context(|| format!("parsing {}", phi_path.display()))?;
    let psi = parse_dimacs(&read(psi_path)?)
        .with_context(|| format!("parsing {}", psi_path.display()))?;
    let inst = satunsat_instance(&phi, &psi);
    let expected = json!({
        "positive": inst.is_positive(),
        "target_facets": inst.target_facets,
        "facets": per_semantics(inst.expected_facets),
    });
    let m = manifest(
        "satunsat",
        json!({ "phi": phi_path, "psi": psi_path }),
        &inst.framework,
        expected,
    );
    Ok(Generated {
        framework: inst.framework,
        manifest: m,
    })
}

pub fn qbf(path: &Path) -> Result<Generated> {
    let q =
        parse_qdimacs_ae(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let truth = q.evaluate();
    let af = qbf_reduction(&guard_satisfiable(&q));
    let expected = json!({ "qbf_true": truth, "phi_is_pref_facet": !truth });
    let m = manifest("qbf", json!({ "qdimacs": path }), &af, expected);
    Ok(Generated {
        framework: af,
        manifest: m,
    })
}

pub fn random(n: usize, p: f64, seed: u64) -> Result<Generated> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if !(0.0..=1.0).contains(&p) {
        bail!("--p must lie in [0, 1]");
    }
    let af = random_af(n, p, seed);
    let m = manifest(
        "random",
        json!({ "n": n, "p": p, "seed": seed }),
        &af,
        Value::Null,
    );
    Ok(Generated {
        framework: af,
        manifest: m,
    })
}

/// `k` disjoint mutually attacking pairs: 2^k stable extensions, 2k facets.
pub fn mutual_pairs(k: usize) -> Result<Generated> {
    if k == 0 {
        bail!("--k must be at least 1");
    }
    let af = pairs(k);
    let expected =
        json!({ "stable_extensions": format!("2^{k}"), "facets": per_semantics(Some(2 * k)) });
    let m = manifest("pairs", json!({ "k": k }), &af, expected);
    Ok(Generated {
        framework: af,
        manifest: m,
    })
}
