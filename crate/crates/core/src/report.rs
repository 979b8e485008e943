//! JSON reports emitted by the command line front end.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::stdcomplex::BijectionTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionEntry {
    pub basis: Vec<u32>,
    pub face: Vec<u32>,
    /// Path word, for lattice path matroids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    /// Marking-path statistic of the path, for lattice path matroids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub statistic: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub faces: Vec<Vec<u32>>,
    pub f_vector: Vec<usize>,
    pub num_bases: usize,
    pub bijection: Vec<BijectionEntry>,
}

impl Report {
    pub fn new(complex: &SimplicialComplex, num_bases: usize) -> Self {
        Report {
            faces: complex.to_face_lists(),
            f_vector: complex.f_vector(),
            num_bases,
            bijection: Vec::new(),
        }
    }

    pub fn with_table(mut self, table: &BijectionTable) -> Self {
        self.bijection = table
            .iter()
            .map(|(b, f)| BijectionEntry {
                basis: b.as_slice().to_vec(),
                face: f.as_slice().to_vec(),
                path: None,
                statistic: None,
            })
            .collect();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Plain-text form: one face per line, then the f-vector and, if present,
    /// the bijection.
    pub fn to_text(&self) -> String {
        let set = |v: &[u32]| {
            let inner: Vec<String> = v.iter().map(u32::to_string).collect();
            format!("{{{}}}", inner.join(","))
        };
        let mut out = String::new();
        out.push_str(&format!("bases {}\n", self.num_bases));
        out.push_str(&format!("f-vector {:?}\n", self.f_vector));
        if self.bijection.is_empty() {
            for f in &self.faces {
                out.push_str(&set(f));
                out.push('\n');
            }
        }
        for e in &self.bijection {
            out.push_str(&format!("{} -> {}", set(&e.basis), set(&e.face)));
            if let (Some(p), Some(s)) = (&e.path, &e.statistic) {
                out.push_str(&format!("  {p} st={}", set(s)));
            }
            out.push('\n');
        }
        out
    }
}
