//! Formula-versus-oracle consistency matrix for one principal input.

use serde::Serialize;

use crate::betti::{betti_table, default_max_degree, extremal_from_betti, reg_from_betti, CHECK_PRIME};
use crate::error::Result;
use crate::fixed::{closure, is_borel_type, is_dfixed, is_stable, principal_ideal, PrincipalInput};
use crate::regularity::{corners, reg_formula, reg_sequential, reg_stability_for};
use crate::socle::{agrees_with_direct, socle_containment_check, socle_formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    fn push(&mut self, name: &'static str, ok: bool, detail: String) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name, status, detail });
    }

    fn skip(&mut self, name: &'static str, why: &str) {
        self.checks.push(Check { name, status: Status::Skipped, detail: why.to_string() });
    }
}

/// Runs every cross-check; the Betti table is computed over
/// `characteristic` and again over a second prime.
pub fn verify(input: &PrincipalInput, characteristic: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport { checks: Vec::new() };
    let ideal = principal_ideal(input)?;
    let d = input.d();

    let closed = closure(&[input.monomial()], d)?;
    report.push(
        "closure = product",
        closed == ideal,
        format!("{} vs {} generators", closed.gens().len(), ideal.gens().len()),
    );
    report.push("d-fixed", is_dfixed(&ideal, d), String::new());
    report.push("Borel type", is_borel_type(&ideal)?, String::new());

    if input.n() >= 2 && input.blocks()[0].var >= 2 {
        let soc = socle_formula(input)?;
        let ok = agrees_with_direct(input, &soc)?;
        let degs: Vec<String> = soc.degrees.iter().map(|s| format!("{}:{}", s.degree, s.dimension)).collect();
        report.push("socle formula = enumeration", ok, degs.join(" "));
    } else {
        report.skip("socle formula = enumeration", "needs n >= 2 and i_1 >= 2");
    }
    if input.r() >= 2 {
        report.push("socle inside first chain step", socle_containment_check(input)?, String::new());
    } else {
        report.skip("socle inside first chain step", "single block");
    }

    let reg = reg_formula(input)?.value;
    let seq = reg_sequential(&ideal)?.value;
    report.push("reg formula = sequential", reg == seq, format!("{reg} vs {seq}"));

    let stab = reg_stability_for(input)?;
    if stab.upper_bound_only {
        report.push("reg formula <= stability", reg <= stab.value, format!("{reg} vs {}", stab.value));
    } else {
        report.push("reg formula = stability", reg == stab.value, format!("{reg} vs {}", stab.value));
    }
    let window: Vec<u32> = (reg as u32..=reg as u32 + 2)
        .filter(|&e| !is_stable(&ideal.truncate(e)))
        .collect();
    report.push("stable at reg..reg+2", window.is_empty(), format!("unstable at {window:?}"));

    let max_degree = default_max_degree(&ideal, Some(reg))?;
    let table = betti_table(&ideal, max_degree, characteristic)?;
    if table.is_certified() {
        let from_betti = reg_from_betti(&table)?.ideal;
        report.push("reg formula = Betti", reg == from_betti, format!("{reg} vs {from_betti}"));
        let mut predicted: Vec<(usize, u64, u64)> = corners(input)?
            .into_iter()
            .filter(|c| c.survives)
            .map(|c| (c.position, c.row, c.beta as u64))
            .collect();
        let mut observed: Vec<(usize, u64, u64)> = extremal_from_betti(&table)?
            .into_iter()
            .map(|e| (e.i, e.row, e.beta))
            .collect();
        predicted.sort_unstable();
        observed.sort_unstable();
        report.push(
            "corners = extremal Betti",
            predicted == observed,
            format!("{predicted:?} vs {observed:?}"),
        );
    } else {
        report.skip("reg formula = Betti", "Betti table not certified");
        report.skip("corners = extremal Betti", "Betti table not certified");
    }
    report.push("Betti Euler characteristic", table.euler_characteristics_match(), String::new());
    let other = if characteristic == CHECK_PRIME { crate::betti::DEFAULT_PRIME } else { CHECK_PRIME };
    let second = betti_table(&ideal, max_degree, other)?;
    report.push(
        "Betti tables agree across characteristics",
        second.entries == table.entries,
        format!("{characteristic} vs {other}"),
    );
    Ok(report)
}
