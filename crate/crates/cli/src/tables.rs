//! CSV regeneration of the five result tables.
//!
//! Tables 1 and 5 hold exact values on hypercubes and folded hypercubes and
//! are solved up to `limit`; larger cells read `skipped`. Tables 2–4 are the
//! complex-based upper bounds on `Ψ(Q_n)` over `n = 1..22`, `23..28` and
//! `29..93`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use anyhow::Result;
use drset::coinweigh::bounds_up_to;
use drset::solver::{solve_beta, solve_phi, solve_psi, SolveOptions, Symmetry};
use drset::Family;

const EXACT: SolveOptions = SolveOptions { budget: None };

pub fn render(which: u8, limit: u32) -> Result<String> {
    match which {
        1 => table1(limit),
        2 => bounds(1..=22),
        3 => bounds(23..=28),
        4 => bounds(29..=93),
        5 => table5(limit),
        _ => anyhow::bail!("there is no table {which}"),
    }
}

fn cell(n: u32, limit: u32, f: impl FnOnce() -> Result<usize>) -> Result<String> {
    if n > limit {
        Ok("skipped".into())
    } else {
        Ok(f()?.to_string())
    }
}

fn table1(limit: u32) -> Result<String> {
    let mut out = String::from("n,beta_Q,beta_F\n");
    for n in 1..=9 {
        let q = cell(n, limit, || Ok(solve_beta(&Family::cube(n)?, EXACT)?.value))?;
        let f = if n == 1 {
            "-".into()
        } else {
            cell(n, limit, || {
                Ok(solve_beta(&Family::folded(n)?, EXACT)?.value)
            })?
        };
        writeln!(out, "{n},{q},{f}")?;
    }
    Ok(out)
}

fn table5(limit: u32) -> Result<String> {
    let mut out = String::from("n,beta_F,psi_F,phi_F\n");
    for n in 2..=10 {
        let beta = cell(n, limit, || {
            Ok(solve_beta(&Family::folded(n)?, EXACT)?.value)
        })?;
        let psi = cell(n, limit, || {
            Ok(solve_psi(&Family::folded(n)?, Symmetry::VertexTransitive, EXACT)?.value)
        })?;
        let phi = cell(n, limit, || {
            Ok(solve_phi(&Family::folded(n)?, 0, EXACT)?.value)
        })?;
        writeln!(out, "{n},{beta},{psi},{phi}")?;
    }
    Ok(out)
}

fn bounds(range: RangeInclusive<usize>) -> Result<String> {
    let table = bounds_up_to(*range.end())?;
    let mut out = String::from("n,P\n");
    for n in range {
        writeln!(
            out,
            "{n},{}",
            table.get(n).expect("within the computed range")
        )?;
    }
    Ok(out)
}
