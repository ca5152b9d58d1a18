//! Named, reproducible verification campaigns binding the enumerator and the
//! property deciders together, with machine-readable reports.
//!
//! Campaigns:
//! - `pancyclicity`: every 2-connected graph of orders 7..=9 (10 behind the
//!   big flag) in which all 4-vertex induced subgraphs have >= 2 edges is
//!   pancyclic.
//! - `cycle-extension`: in the same population, every non-spanning cycle
//!   length extends by one.
//! - `ce-gap`: counts the members of that population whose connectivity is
//!   strictly below their independence number (they are hamiltonian without
//!   satisfying the connectivity >= independence sufficient condition).
//! - `triangle-free`: triangle-free graphs with min degree >= p among graphs
//!   where every (p+2)-subset induces >= p edges exist only as the C5
//!   blow-up with p >= 6; checked exhaustively for p = 2, 4 and
//!   constructively for p = 6.
//! - `qform`: closed-form path/cycle quadratic form bounds against the
//!   brute-force oracle.
//! - `z-family`: the clique-plus-triangle family is 2-connected, has
//!   connectivity 2 and independence number 3, satisfies the [4,2] subset
//!   condition and is pancyclic for every order in range.

use crate::canon::canonical_form;
use crate::constructions::{c5_blowup, z_graph};
use crate::enumerate::{canonical_dedup, generate, Filters, PostFilter, PruneFilter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::properties::{
    cycle_spectrum, independence_number, is_pancyclic, is_st_graph, is_triangle_free,
    vertex_connectivity, StQuery,
};
use crate::qforms::{
    brute_force_extrema, cycle_form, cycle_form_lower, path_form, path_form_bounds, FormKind,
};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub reason: String,
}

/// Machine-readable record of one campaign run. `verdict` is "pass" exactly
/// when `violations` is empty.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub parameters: BTreeMap<String, String>,
    pub population: u64,
    pub counts: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub graphs: Vec<String>,
    pub assumption_notes: Vec<String>,
    pub runtime_ms: u64,
    pub verdict: String,
}

impl CampaignReport {
    fn new(campaign: &str) -> CampaignReport {
        CampaignReport {
            campaign: campaign.to_string(),
            parameters: BTreeMap::new(),
            population: 0,
            counts: BTreeMap::new(),
            violations: Vec::new(),
            graphs: Vec::new(),
            assumption_notes: Vec::new(),
            runtime_ms: 0,
            verdict: String::new(),
        }
    }

    fn finish(mut self, started: Instant) -> CampaignReport {
        self.runtime_ms = started.elapsed().as_millis() as u64;
        self.verdict = if self.violations.is_empty() {
            "pass".to_string()
        } else {
            "fail".to_string()
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One summary row plus one row per named count.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("campaign,key,value\n");
        out.push_str(&format!("{},population,{}\n", self.campaign, self.population));
        out.push_str(&format!(
            "{},violations,{}\n",
            self.campaign,
            self.violations.len()
        ));
        for (k, v) in &self.counts {
            out.push_str(&format!("{},{k},{v}\n", self.campaign));
        }
        out.push_str(&format!("{},runtime_ms,{}\n", self.campaign, self.runtime_ms));
        out.push_str(&format!("{},verdict,{}\n", self.campaign, self.verdict));
        out
    }
}

/// Where a campaign's graphs come from: internal generation or an external
/// graph6 stream (deduplicated and filtered to the campaign's population).
#[derive(Clone, Default)]
pub enum Source {
    #[default]
    Generated,
    External(Vec<Graph>),
}

fn population(n: usize, filters: &Filters, source: &Source) -> Result<Vec<Graph>> {
    match source {
        Source::Generated => generate(n, filters),
        Source::External(graphs) => {
            let of_order: Vec<Graph> = graphs.iter().filter(|g| g.order() == n).cloned().collect();
            canonical_dedup(&of_order, filters)
        }
    }
}

fn st42() -> StQuery {
    StQuery::new(4, 2).expect("static query")
}

fn two_connected_st42_filters() -> Filters {
    Filters::none()
        .with_prune(PruneFilter::StHereditary(st42()))
        .with_post(PostFilter::ConnectivityAtLeast(2))
}

fn check_orders(name: &str, orders: &[usize], lo: usize, hi: usize) -> Result<()> {
    if orders.is_empty() {
        return Err(Error::CampaignParameter(format!(
            "{name}: empty order range"
        )));
    }
    for &n in orders {
        if !(lo..=hi).contains(&n) {
            return Err(Error::CampaignParameter(format!(
                "{name}: order {n} outside {lo}..={hi}"
            )));
        }
    }
    Ok(())
}

fn g6(g: &Graph) -> String {
    canonical_form(g)
        .map(|f| f.to_graph6())
        .unwrap_or_else(|_| g.to_graph6().unwrap_or_default())
}

/// Every 2-connected member of the [4,2] population of the given orders must
/// be pancyclic.
pub fn campaign_pancyclicity(orders: &[usize], source: &Source) -> Result<CampaignReport> {
    let started = Instant::now();
    check_orders("pancyclicity", orders, 7, 10)?;
    let mut report = CampaignReport::new("pancyclicity");
    report
        .parameters
        .insert("orders".into(), format!("{orders:?}"));
    for &n in orders {
        let pop = population(n, &two_connected_st42_filters(), source)?;
        report.population += pop.len() as u64;
        report
            .counts
            .insert(format!("population_n{n}"), pop.len() as u64);
        let mut violations: Vec<Violation> = pop
            .par_iter()
            .filter(|g| !is_pancyclic(g))
            .map(|g| Violation {
                graph6: g6(g),
                reason: format!("2-connected [4,2]-graph of order {n} is not pancyclic"),
            })
            .collect();
        violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        report.violations.extend(violations);
    }
    Ok(report.finish(started))
}

/// In the same population, any achieved cycle length below the order must be
/// extendable by one.
pub fn campaign_cycle_extension(orders: &[usize], source: &Source) -> Result<CampaignReport> {
    let started = Instant::now();
    check_orders("cycle-extension", orders, 7, 9)?;
    let mut report = CampaignReport::new("cycle-extension");
    report
        .parameters
        .insert("orders".into(), format!("{orders:?}"));
    for &n in orders {
        let pop = population(n, &two_connected_st42_filters(), source)?;
        report.population += pop.len() as u64;
        report
            .counts
            .insert(format!("population_n{n}"), pop.len() as u64);
        let mut violations: Vec<Violation> = pop
            .par_iter()
            .filter_map(|g| {
                let spectrum = cycle_spectrum(g);
                for &k in &spectrum {
                    if k < n && !spectrum.contains(&(k + 1)) {
                        return Some(Violation {
                            graph6: g6(g),
                            reason: format!("has a {k}-cycle but no {}-cycle", k + 1),
                        });
                    }
                }
                None
            })
            .collect();
        violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        report.violations.extend(violations);
    }
    Ok(report.finish(started))
}

/// Counts the isomorphism classes of 2-connected [4,2]-graphs of order `n`
/// whose connectivity is strictly below their independence number, lists
/// them all, and checks each is pancyclic.
pub fn campaign_ce_gap(n: usize, source: &Source) -> Result<CampaignReport> {
    let started = Instant::now();
    check_orders("ce-gap", &[n], 7, 10)?;
    let mut report = CampaignReport::new("ce-gap");
    report.parameters.insert("order".into(), n.to_string());
    report.assumption_notes.push(
        "population: isomorphism classes of 2-connected graphs of this order in which \
         every 4-vertex induced subgraph has at least 2 edges; the gap count is over \
         isomorphism classes, not labeled graphs"
            .into(),
    );
    let pop = population(n, &two_connected_st42_filters(), source)?;
    report.population = pop.len() as u64;

    let members: Vec<&Graph> = pop
        .par_iter()
        .filter(|g| vertex_connectivity(g) < independence_number(g))
        .collect();
    report
        .counts
        .insert("ce_gap".into(), members.len() as u64);
    let mut listed: Vec<String> = members.iter().map(|g| g6(g)).collect();
    listed.sort();
    report.graphs = listed;
    let mut violations: Vec<Violation> = members
        .par_iter()
        .filter(|g| !is_pancyclic(g))
        .map(|g| Violation {
            graph6: g6(g),
            reason: "gap member is not pancyclic".into(),
        })
        .collect();
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    report.violations = violations;
    Ok(report.finish(started))
}

/// Triangle-free graphs among graphs whose every (p+2)-subset induces at
/// least p edges, with min degree >= p: none exist for p = 2 and p = 4 at
/// the checked orders; for p = 6 the C5 blow-up is the (unique) witness.
pub fn campaign_triangle_free(
    p: usize,
    orders: &[usize],
    source: &Source,
) -> Result<CampaignReport> {
    let started = Instant::now();
    let mut report = CampaignReport::new("triangle-free");
    report.parameters.insert("p".into(), p.to_string());
    match p {
        2 | 4 => {
            let (lo, hi, s, t) = if p == 2 { (7, 10, 4, 2) } else { (11, 12, 6, 4) };
            check_orders("triangle-free", orders, lo, hi)?;
            report
                .parameters
                .insert("orders".into(), format!("{orders:?}"));
            let query = StQuery::new(s, t as u64)?;
            let filters = Filters::none()
                .with_prune(PruneFilter::TriangleFree)
                .with_post(PostFilter::MinDegree(p));
            for &n in orders {
                let pop = population(n, &filters, source)?;
                report.population += pop.len() as u64;
                report
                    .counts
                    .insert(format!("population_n{n}"), pop.len() as u64);
                let mut violations: Vec<Violation> = pop
                    .par_iter()
                    .filter(|g| is_st_graph(g, query))
                    .map(|g| Violation {
                        graph6: g6(g),
                        reason: format!(
                            "triangle-free graph of order {n} with min degree >= {p} satisfies \
                             the [{s},{t}] subset condition"
                        ),
                    })
                    .collect();
                violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
                report.violations.extend(violations);
            }
        }
        6 => {
            let q = p / 2;
            let witness = c5_blowup(q)?;
            report.population = 1;
            let mut fail = |reason: String, g: &Graph| {
                report.violations.push(Violation {
                    graph6: g6(g),
                    reason,
                });
            };
            if !is_triangle_free(&witness) {
                fail("C5 blow-up is not triangle-free".into(), &witness);
            }
            if (0..witness.order()).any(|v| witness.row(v).count_ones() as usize != p) {
                fail(format!("C5 blow-up is not {p}-regular"), &witness);
            }
            if witness.order() < 2 * p + 3 {
                fail(format!("order {} below {}", witness.order(), 2 * p + 3), &witness);
            }
            let query = StQuery::new(p + 2, p as u64)?;
            if !is_st_graph(&witness, query) {
                fail(format!("C5 blow-up fails the [{},{p}] subset condition", p + 2), &witness);
            }
            // uniqueness among C5 blow-ups of order <= 16
            let mut qualifying = 0u64;
            for qq in 1..=3 {
                let candidate = c5_blowup(qq)?;
                let regular = (0..candidate.order())
                    .all(|v| candidate.row(v).count_ones() as usize == p);
                if is_triangle_free(&candidate)
                    && regular
                    && candidate.order() >= 2 * p + 3
                    && is_st_graph(&candidate, query)
                {
                    qualifying += 1;
                }
            }
            report.counts.insert("qualifying_blowups".into(), qualifying);
            if qualifying != 1 {
                report.violations.push(Violation {
                    graph6: witness.to_graph6().unwrap_or_default(),
                    reason: format!("expected exactly one qualifying blow-up, found {qualifying}"),
                });
            }
        }
        other => {
            return Err(Error::CampaignParameter(format!(
                "triangle-free: p must be 2, 4 or 6, got {other}"
            )))
        }
    }
    Ok(report.finish(started))
}

/// Closed-form quadratic form bounds against the brute-force oracle for all
/// 2 <= k <= n <= n_max, including witness attainment.
pub fn campaign_qform(n_max: usize) -> Result<CampaignReport> {
    let started = Instant::now();
    if !(2..=14).contains(&n_max) {
        return Err(Error::CampaignParameter(format!(
            "qform: n_max {n_max} outside 2..=14"
        )));
    }
    let mut report = CampaignReport::new("qform");
    report.parameters.insert("n_max".into(), n_max.to_string());
    let mut pairs = 0u64;
    for n in 2..=n_max as u64 {
        for k in 2..=n as usize {
            pairs += 1;
            let mut fail = |reason: String| {
                report.violations.push(Violation {
                    graph6: String::new(),
                    reason: format!("(n={n}, k={k}): {reason}"),
                });
            };
            let bounds = path_form_bounds(n, k)?;
            let oracle = brute_force_extrema(n, k, FormKind::Path)?;
            if oracle.min != bounds.lower {
                fail(format!(
                    "path minimum {} != closed-form lower {}",
                    oracle.min, bounds.lower
                ));
            }
            if Some(oracle.max) != bounds.upper {
                fail(format!(
                    "path maximum {} != closed-form upper {:?}",
                    oracle.max, bounds.upper
                ));
            }
            if path_form(&bounds.lower_witness) != bounds.lower {
                fail("path lower witness does not attain the bound".into());
            }
            match &bounds.upper_witness {
                Some(w) if Some(path_form(w)) == bounds.upper => {}
                _ => fail("path upper witness does not attain the bound".into()),
            }
            let cyc = cycle_form_lower(n, k)?;
            let cyc_oracle = brute_force_extrema(n, k, FormKind::Cycle)?;
            if cyc_oracle.min != cyc.lower {
                fail(format!(
                    "cycle minimum {} != closed-form lower {}",
                    cyc_oracle.min, cyc.lower
                ));
            }
            if cycle_form(&cyc.lower_witness) != cyc.lower {
                fail("cycle lower witness does not attain the bound".into());
            }
        }
    }
    report.population = pairs;
    report.counts.insert("pairs_checked".into(), pairs);
    Ok(report.finish(started))
}

/// The clique-plus-triangle family: for each order, the [4,2] subset
/// condition holds, connectivity is exactly 2, independence number exactly
/// 3, and the graph is pancyclic.
pub fn campaign_z_family(orders: &[usize]) -> Result<CampaignReport> {
    let started = Instant::now();
    check_orders("z-family", orders, 7, 16)?;
    let mut report = CampaignReport::new("z-family");
    report
        .parameters
        .insert("orders".into(), format!("{orders:?}"));
    report.population = orders.len() as u64;
    for &n in orders {
        let g = z_graph(n)?;
        let mut fail = |reason: String| {
            report.violations.push(Violation {
                graph6: g.to_graph6().unwrap_or_default(),
                reason: format!("Z_{n}: {reason}"),
            });
        };
        if !is_st_graph(&g, st42()) {
            fail("fails the [4,2] subset condition".into());
        }
        let kappa = vertex_connectivity(&g);
        if kappa != 2 {
            fail(format!("connectivity {kappa} != 2"));
        }
        let alpha = independence_number(&g);
        if alpha != 3 {
            fail(format!("independence number {alpha} != 3"));
        }
        if !is_pancyclic(&g) {
            fail("not pancyclic".into());
        }
        report.counts.insert(format!("kappa_n{n}"), kappa as u64);
        report.counts.insert(format!("alpha_n{n}"), alpha as u64);
    }
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cycle_graph;

    #[test]
    fn qform_campaign_small() {
        let report = campaign_qform(8).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.counts["pairs_checked"], (1..8).sum::<u64>());
    }

    #[test]
    fn qform_rejects_big_ranges() {
        assert!(campaign_qform(15).is_err());
    }

    #[test]
    fn z_family_small() {
        let report = campaign_z_family(&[7, 8, 9]).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.counts["kappa_n9"], 2);
        assert_eq!(report.counts["alpha_n9"], 3);
        assert!(campaign_z_family(&[6]).is_err());
        assert!(campaign_z_family(&[]).is_err());
    }

    #[test]
    fn pancyclicity_order7() {
        let report = campaign_pancyclicity(&[7], &Source::Generated).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.population > 0);
        assert!(campaign_pancyclicity(&[6], &Source::Generated).is_err());
    }

    #[test]
    fn triangle_free_witness_case() {
        let report = campaign_triangle_free(6, &[], &Source::Generated).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.counts["qualifying_blowups"], 1);
        assert!(campaign_triangle_free(3, &[], &Source::Generated).is_err());
    }

    #[test]
    fn external_source_matches_generated() {
        // feed the full order-7 population externally (all graphs, arbitrary
        // labelings); the campaign must see the identical population
        let everything = generate(7, &Filters::none()).unwrap();
        let external = Source::External(everything);
        let from_external = campaign_pancyclicity(&[7], &external).unwrap();
        let from_generated = campaign_pancyclicity(&[7], &Source::Generated).unwrap();
        assert_eq!(from_external.population, from_generated.population);
        assert!(from_external.passed());
    }

    #[test]
    fn report_serialization() {
        let report = campaign_z_family(&[7]).unwrap();
        let json = report.to_json();
        assert!(json.contains("\"campaign\": \"z-family\""));
        assert!(json.contains("\"verdict\": \"pass\""));
        let csv = report.to_csv();
        assert!(csv.starts_with("campaign,key,value\n"));
        assert!(csv.contains("z-family,verdict,pass"));
    }

    #[test]
    fn violation_reports_are_recheckable() {
        // force a violation by running the cycle-extension predicate over a
        // population hand-fed with C7 (not a [4,2]-graph, so the population
        // filter must drop it) plus Z_7 (a genuine member)
        let pop = vec![cycle_graph(7).unwrap(), z_graph(7).unwrap()];
        let report = campaign_ce_gap(7, &Source::External(pop)).unwrap();
        assert_eq!(report.population, 1, "C7 must be filtered out");
        assert_eq!(report.counts["ce_gap"], 1, "Z_7 has kappa 2 < alpha 3");
        for g6 in &report.graphs {
            let g = Graph::from_graph6(g6).unwrap();
            assert!(vertex_connectivity(&g) < independence_number(&g));
        }
    }
}
