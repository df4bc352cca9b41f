//! Text formats, a parallel frontier mapper and the error type behind the
//! `blindcop` command-line tool.

pub mod formats;

use std::path::PathBuf;

use blindcop_core::solver::FrontierMap;
use rayon::prelude::*;
use thiserror::Error;

pub use formats::FormatError;

/// Exit status of the command-line tool.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Win = 0,
    Lose = 1,
    Invalid = 2,
    Resource = 3,
    Internal = 4,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] blindcop_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        use blindcop_core::Error as E;
        match self {
            CliError::Core(E::NotWinning(_)) => Exit::Lose,
            CliError::Core(E::ResourceLimit(_)) => Exit::Resource,
            CliError::Core(E::Internal(_)) => Exit::Internal,
            _ => Exit::Invalid,
        }
    }
}

/// Evaluates solver frontiers on the current rayon pool. Order is preserved,
/// so results do not depend on the thread count.
#[derive(Clone, Copy, Debug, Default)]
pub struct RayonMap;

impl FrontierMap for RayonMap {
    fn map<S, T, F>(&self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        if items.len() < 64 {
            items.iter().map(f).collect()
        } else {
            items.par_iter().map(f).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use blindcop_core::generators::{cycle, grid};
    use blindcop_core::solver::{compute, compute_with, SolverConfig};
    use blindcop_core::{GameKind, Radius};

    #[test]
    fn rayon_matches_sequential() {
        let cfg = SolverConfig::default();
        for g in [cycle(7), grid(3, 3)] {
            let seq = compute(&g, GameKind::Bcw, Radius::ONE, &cfg).unwrap();
            let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
            let par = pool.install(|| compute_with(&g, GameKind::Bcw, Radius::ONE, &cfg, &RayonMap)).unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn exit_codes() {
        let e = CliError::Core(blindcop_core::Error::ResourceLimit("x".into()));
        assert_eq!(e.exit() as i32, 3);
        assert_eq!(CliError::Usage("x".into()).exit() as i32, 2);
    }
}
