//! The `verify` report: one line per claim, `claim expected actual status`.

use std::collections::{BTreeMap, HashSet};

use ingraph::automorphism::aut_order;
use ingraph::graph::{expected_degree, gaussian_binomial, InclusionGraph, Length};
use ingraph::search::count_automorphisms;
use serde::Serialize;

use crate::Failure;

pub struct Budget {
    pub vertices: usize,
    pub order: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Serialize)]
struct Claim {
    claim: String,
    expected: String,
    actual: String,
    status: Status,
}

impl Claim {
    fn compare(claim: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Claim {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Claim { claim: claim.into(), expected, actual, status }
    }
}

pub fn run(g: &InclusionGraph, budget: Budget, json: bool) -> Result<(), Failure> {
    let claims = claims(g, &budget)?;
    if json {
        let text = serde_json::to_string_pretty(&claims).map_err(|e| Failure::Usage(e.to_string()))?;
        println!("{text}");
    } else {
        println!("claim\texpected\tactual\tstatus");
        for c in &claims {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            };
            println!("{}\t{}\t{}\t{status}", c.claim, c.expected, c.actual);
        }
    }
    let failed: Vec<&str> = claims.iter().filter(|c| c.status == Status::Fail).map(|c| c.claim.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed: {}", failed.join(", "))))
    }
}

fn claims(g: &InclusionGraph, budget: &Budget) -> Result<Vec<Claim>, Failure> {
    let n = g.ambient_dim();
    let field = g.field();
    let q = field.order() as u64;
    let mut out = Vec::new();

    let mut vertices = 0u128;
    for k in 1..n {
        vertices += gaussian_binomial(n, k, q)?;
    }
    out.push(Claim::compare("vertices", vertices, g.vertex_count()));

    // Degrees grouped by dimension; a class is reported as a single value
    // when all of its vertices agree.
    let mut by_dim: BTreeMap<usize, HashSet<usize>> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        by_dim.entry(g.dim(v)).or_default().insert(g.degree(v));
    }
    for (k, degrees) in by_dim {
        let mut degrees: Vec<usize> = degrees.into_iter().collect();
        degrees.sort_unstable();
        let actual = degrees.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        out.push(Claim::compare(format!("degree k={k}"), expected_degree(n, k, q)?, actual));
    }

    let inv = g.invariants();
    let diameter = if n >= 3 { Length::Finite(3) } else { Length::Infinite };
    out.push(Claim::compare("diameter", diameter, inv.diameter));

    let girth_ok = matches!(inv.girth, Length::Finite(3) | Length::Finite(6) | Length::Infinite);
    out.push(Claim {
        claim: "girth".into(),
        expected: "3|6|inf".into(),
        actual: inv.girth.to_string(),
        status: if girth_ok { Status::Pass } else { Status::Fail },
    });

    out.push(Claim::compare("clique number", n - 1, inv.clique_number));

    let colors = g.dimension_coloring();
    let used = colors.iter().collect::<HashSet<_>>().len();
    let coloring = if g.is_proper_coloring(&colors) { format!("proper, {used} colors") } else { "improper".into() };
    out.push(Claim::compare("dimension coloring", format!("proper, {} colors", n - 1), coloring));

    let order = aut_order(n, field.characteristic() as u64, field.degree())?;
    let claim = if g.vertex_count() > budget.vertices {
        Some(format!("more than {} vertices", budget.vertices))
    } else if order > budget.order.into() {
        Some(format!("order above {}", budget.order))
    } else {
        None
    };
    out.push(match claim {
        Some(reason) => Claim {
            claim: "automorphism group order".into(),
            expected: order.to_string(),
            actual: format!("- ({reason})"),
            status: Status::Skipped,
        },
        None => Claim::compare("automorphism group order", &order, count_automorphisms(g.adjacency())?),
    });
    Ok(out)
}
