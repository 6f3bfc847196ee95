//! Case-level parallelism for property checks.
//!
//! Cases are independent and seeded by index, so both strategies report the
//! same first failure.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    /// Runs on the rayon pool; sequential when built without `parallel`.
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    /// The lowest-indexed case in `0..cases` for which `check` fails.
    pub fn first_failure<F>(self, cases: usize, check: F) -> Option<(usize, String)>
    where
        F: Fn(usize) -> Result<(), String> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..cases)
                .into_par_iter()
                .find_map_first(|i| check(i).err().map(|msg| (i, msg))),
            _ => (0..cases).find_map(|i| check(i).err().map(|msg| (i, msg))),
        }
    }

    /// Maps `0..cases` in order.
    pub fn map<T, F>(self, cases: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..cases).into_par_iter().map(f).collect(),
            _ => (0..cases).map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let check = |i: usize| {
            if i % 7 == 5 {
                Err(format!("case {i}"))
            } else {
                Ok(())
            }
        };
        let par = Exec::Parallel.first_failure(100, check);
        let seq = Exec::Sequential.first_failure(100, check);
        assert_eq!(par, Some((5, "case 5".to_owned())));
        assert_eq!(par, seq);
        assert_eq!(Exec::Parallel.first_failure(5, check), None);
        assert_eq!(Exec::Parallel.map(4, |i| i * i), vec![0, 1, 4, 9]);
    }
}
