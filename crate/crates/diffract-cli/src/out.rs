//! JSON output shapes. Field order is the derive order, which the tests
//! pin, so additions go at the end.

use serde::Serialize;

#[derive(Serialize)]
pub struct LoadOut<'a> {
    pub name: &'a str,
    pub order: usize,
    pub abelian: bool,
    pub labeled: bool,
}

#[derive(Serialize)]
pub struct InfoOut<'a> {
    pub name: &'a str,
    pub order: usize,
    pub abelian: bool,
    /// Pairs of (element order, how many elements have it), ascending.
    pub element_order_counts: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct ElementOut {
    pub index: usize,
    pub label: String,
    pub order: usize,
    pub inverse: usize,
    pub inverse_label: String,
}

#[derive(Serialize)]
pub struct SubgroupOut {
    pub order: usize,
    pub index: usize,
    pub members: Vec<usize>,
}

#[derive(Serialize)]
pub struct CosetsOut {
    pub count: usize,
    pub cosets: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct TransversalOut {
    pub reps: Vec<usize>,
    pub is_transversal: bool,
    pub strategy: String,
}

#[derive(Serialize)]
pub struct BenchOut {
    pub reps: u64,
    pub seed: u64,
    pub agreements: u64,
    pub disagreements: u64,
}
