use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sfvs_core::io::{self, IntervalModel};
use sfvs_core::layout::interval_layout;
use sfvs_core::{Graph, Instance, RootedLayout, VertexSet};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// G(n, p) with a caterpillar layout.
    Random,
    /// Random interval graph with its interval layout.
    Interval,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    /// Number of vertices.
    #[arg(long)]
    pub n: usize,
    /// Edge probability (random).
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    /// Longest interval (interval).
    #[arg(long, default_value_t = 8)]
    pub max_length: i64,
    /// Seed for the ChaCha8 generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output prefix: writes PREFIX.gr and PREFIX.layout, plus
    /// PREFIX.intervals for interval instances.
    #[arg(long)]
    pub out: PathBuf,
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn random_s(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(1.0 / 3.0)).collect()
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    Ok(())
}

fn core_err(source: sfvs_core::Error) -> CliError {
    CliError::Input { context: "generated instance".into(), source }
}

/// `G(n, p)` with unit weights; each vertex joins `S` with probability 1/3.
pub fn random_instance(n: usize, p: f64, seed: u64) -> Result<(Instance, RootedLayout), CliError> {
    check_n(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Usage(format!("--p must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = random_s(&mut rng, n);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    let graph = Graph::with_names(names(n), &edges).map_err(core_err)?;
    let layout = RootedLayout::caterpillar(n).map_err(core_err)?;
    Ok((Instance::unit(graph, s), layout))
}

/// Intervals with left ends in `[0, 2n)` and lengths in `[0, max_length]`,
/// unit weights, S drawn as for [`random_instance`].
pub fn interval_instance(n: usize, max_length: i64, seed: u64) -> Result<(IntervalModel, Instance, RootedLayout), CliError> {
    check_n(n)?;
    if max_length < 0 {
        return Err(CliError::Usage("--max-length must be non-negative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = random_s(&mut rng, n);
    let intervals: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..2 * n as i64);
            (l, l + rng.gen_range(0..=max_length))
        })
        .collect();
    let model = IntervalModel { names: names(n), intervals };
    let graph = model.graph().map_err(core_err)?;
    let layout = interval_layout(&graph, &model.intervals).map_err(core_err)?;
    Ok((model, Instance::unit(graph, s), layout))
}

fn write(path: PathBuf, text: String) -> Result<(), CliError> {
    fs::write(path, text).map_err(CliError::Write)
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

pub fn run(args: &GenerateArgs) -> Result<(), CliError> {
    let (inst, layout) = match args.kind {
        Kind::Random => random_instance(args.n, args.p, args.seed)?,
        Kind::Interval => {
            let (model, inst, layout) = interval_instance(args.n, args.max_length, args.seed)?;
            write(with_ext(&args.out, "intervals"), io::write_intervals(&model))?;
            (inst, layout)
        }
    };
    write(with_ext(&args.out, "gr"), io::write_graph(&inst))?;
    write(with_ext(&args.out, "layout"), layout.to_text(&inst.graph) + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use sfvs_core::layout::{width, WidthKind};

    #[test]
    fn same_seed_same_instance() {
        let a = random_instance(12, 0.4, 9).unwrap();
        let b = random_instance(12, 0.4, 9).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.0, random_instance(12, 0.4, 10).unwrap().0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(random_instance(0, 0.5, 1), Err(CliError::Usage(_))));
        assert!(matches!(random_instance(3, 1.5, 1), Err(CliError::Usage(_))));
        assert!(matches!(interval_instance(0, 4, 1), Err(CliError::Usage(_))));
    }

    #[test]
    fn interval_layouts_have_mim_width_at_most_one() {
        for seed in 0..10 {
            let (_, inst, layout) = interval_instance(20, 6, seed).unwrap();
            assert!(width(&inst.graph, &layout, WidthKind::Mim).unwrap().0 <= 1);
        }
    }
}
