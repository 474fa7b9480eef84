//! Timing grid over (n, r) for the Frobenius characteristic polynomial.

use std::sync::Arc;
use std::time::Instant;

use drinfeld_core::charpoly::charpoly_endomorphism;
use drinfeld_core::random::{field_of_order, random_irreducible, random_module_on};
use drinfeld_core::{Algorithm, CharPolyOptions, FieldTower, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub ns: Vec<usize>,
    pub rs: Vec<usize>,
    pub q: u32,
    /// Degree of 𝔭; `None` means the prime field case `m = n`.
    pub m: Option<usize>,
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Wall time is the minimum over this many runs.
    pub repeats: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub r: usize,
    pub algorithm: Algorithm,
    pub wall_seconds: f64,
    pub frobenius_ops: u64,
    pub l_muls: u64,
}

pub const CSV_HEADER: &str = "n,r,algorithm,wall_seconds,frobenius_ops,l_muls";

/// Parses `N1,N2,...:R1,R2,...`.
pub fn parse_grid(s: &str) -> std::result::Result<(Vec<usize>, Vec<usize>), String> {
    let (ns, rs) = s
        .split_once(':')
        .ok_or_else(|| format!("grid `{s}` must look like `16,32,64:2,3`"))?;
    let list = |part: &str| -> std::result::Result<Vec<usize>, String> {
        part.split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| format!("`{x}` is not a positive integer"))
            })
            .collect()
    };
    Ok((list(ns)?, list(rs)?))
}

/// One tower per `n`, shared by every `r` so that rows differ only in rank.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let fq = field_of_order(cfg.q)?;
    let mut rows = Vec::new();
    for &n in &cfg.ns {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let ell = random_irreducible(&fq, n, &mut rng);
        let tower = Arc::new(FieldTower::new(fq.clone(), ell)?);
        let m = cfg.m.unwrap_or(n);
        for &r in &cfg.rs {
            let module = random_module_on(&tower, r, m, &mut rng)?;
            let u = module.frobenius_endo();
            let opts = CharPolyOptions {
                k: None,
                check_endomorphism: false,
            };
            let mut best = f64::INFINITY;
            let mut counts = None;
            for _ in 0..cfg.repeats.max(1) {
                let before = tower.counters().snapshot();
                let start = Instant::now();
                charpoly_endomorphism(&module, &u, cfg.algorithm, opts)?;
                best = best.min(start.elapsed().as_secs_f64());
                counts.get_or_insert_with(|| tower.counters().snapshot().since(&before));
            }
            let counts = counts.expect("at least one run");
            rows.push(BenchRow {
                n,
                r,
                algorithm: cfg.algorithm,
                wall_seconds: best,
                frobenius_ops: counts.frobenius,
                l_muls: counts.l_muls,
            });
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{:.6},{},{}\n",
            row.n, row.r, row.algorithm, row.wall_seconds, row.frobenius_ops, row.l_muls
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("8,16:2,3").unwrap(), (vec![8, 16], vec![2, 3]));
        assert!(parse_grid("8,16").is_err());
        assert!(parse_grid("8,x:2").is_err());
        assert!(parse_grid("8,0:2").is_err());
    }

    #[test]
    fn small_grid_csv() {
        let cfg = BenchConfig {
            ns: vec![4, 8],
            rs: vec![2],
            q: 2,
            m: None,
            algorithm: Algorithm::Bsgs,
            seed: 1,
            repeats: 1,
        };
        let rows = run_bench(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        let csv = to_csv(&rows);
        assert!(csv.starts_with(CSV_HEADER));
        assert_eq!(csv.lines().count(), 3);
        assert!(rows.iter().all(|r| r.l_muls > 0));
    }
}
