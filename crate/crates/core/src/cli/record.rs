use crate::deformation::DeformationPresentation;
use crate::report::{Check, Report};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

/// The command and arguments that produced a record.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InputEcho {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub len: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brauer: Option<BrauerInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    /// `integer`, `rational` or `p=<prime>`.
    pub mode: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BrauerInput {
    pub edges: usize,
    pub multiplicity: usize,
    pub distance: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PresentationRecord {
    pub n: usize,
    #[serde(rename = "mV")]
    pub m_v: Option<usize>,
    pub generators: Vec<String>,
    pub k_dimension: usize,
    pub ring: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProvenanceRecord {
    pub mu: usize,
    pub ell_prime: usize,
    pub ell_v: usize,
    pub i: usize,
    #[serde(rename = "dV")]
    pub d_v: Option<usize>,
    pub applied_omega: bool,
    pub rotation: usize,
}

/// One line of output. Timings are in microseconds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub input: InputEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceRecord>,
    pub checks: Vec<Check>,
    pub timings: BTreeMap<String, u64>,
}

impl ResultRecord {
    pub fn new(input: InputEcho) -> Self {
        ResultRecord { input, presentation: None, provenance: None, checks: Vec::new(), timings: BTreeMap::new() }
    }

    pub fn with_presentation(mut self, pres: &DeformationPresentation) -> Self {
        let p = &pres.provenance;
        self.presentation = Some(PresentationRecord {
            n: pres.n,
            m_v: pres.m_v,
            generators: pres.generator_strings(),
            k_dimension: pres.k_dimension,
            ring: pres.ring_string(),
        });
        self.provenance = Some(ProvenanceRecord {
            mu: p.mu,
            ell_prime: p.ell_prime,
            ell_v: p.ell_v,
            i: p.i,
            d_v: p.d_v,
            applied_omega: p.applied_omega,
            rotation: p.rotation,
        });
        self
    }

    pub fn add_report(&mut self, report: Report) {
        self.checks.extend(report.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn time(&mut self, key: &str, started: std::time::Instant) {
        self.timings.insert(key.to_string(), started.elapsed().as_micros() as u64);
    }

    /// Plain-text form for terminals.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = String::new();
        let i = &self.input;
        let mut head = i.command.clone();
        if let (Some(e), Some(ell)) = (i.e, i.ell) {
            let _ = write!(head, "  N({e}, {ell})");
        }
        if let (Some(t), Some(l)) = (i.top, i.len) {
            let _ = write!(head, "  top {t}  len {l}");
        }
        if let Some(b) = i.brauer {
            let _ = write!(head, "  tree e={} m={} d={}", b.edges, b.multiplicity, b.distance);
        }
        if let Some(r) = &i.ring {
            let _ = write!(head, "  ring {r}");
        }
        let _ = writeln!(out, "{head}");
        if let Some(p) = &self.presentation {
            let mv = p.m_v.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(out, "  R(V) = {}   n = {}   m_V = {mv}   dim_k = {}", p.ring, p.n, p.k_dimension);
        }
        if let Some(p) = &self.provenance {
            let dv = p.d_v.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "  mu = {}  l' = {}  l_V = {}  i = {}  d_V = {dv}  omega = {}  rotation = {}",
                p.mu, p.ell_prime, p.ell_v, p.i, p.applied_omega, p.rotation
            );
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        for c in self.checks.iter().filter(|c| verbose || !c.pass) {
            let mark = if c.pass { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {}: {}", c.name, c.detail);
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "  {} checks, {failed} failed", self.checks.len());
        }
        out
    }
}
