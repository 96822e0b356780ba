//! Term generators for property tests: proptest strategies for both
//! calculi, seeded sampling, and exhaustive enumeration of small CCS terms.

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use crate::syntax::{parse, Calculus, DefinitionEnv, Name, Process};

const CHANNELS: [&str; 3] = ["a", "b", "c"];

/// Shape of generated terms.
#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub calculus: Calculus,
    /// Maximum nesting depth of operators.
    pub depth: u32,
    /// Allow fractions (CCS^dp only).
    pub fractions: bool,
    /// Allow references to the constants of [`sample_env`].
    pub constants: bool,
    pub restriction: bool,
}

impl GenConfig {
    pub fn ccs() -> Self {
        GenConfig {
            calculus: Calculus::CcsDp,
            depth: 4,
            fractions: true,
            constants: true,
            restriction: true,
        }
    }

    pub fn webpi() -> Self {
        GenConfig {
            calculus: Calculus::WebPi,
            fractions: false,
            ..GenConfig::ccs()
        }
    }

    /// Plain CCS: no fractions, no constants.
    pub fn plain_ccs() -> Self {
        GenConfig {
            fractions: false,
            constants: false,
            ..GenConfig::ccs()
        }
    }
}

/// Definitions that generated constants refer to. Both are guarded and
/// mention the generator's channel names.
pub fn sample_env(calculus: Calculus) -> DefinitionEnv {
    let src = match calculus {
        Calculus::CcsDp => "A = a!.A + b?.0; B = b!.c?.B; main = 0",
        Calculus::WebPi => "A = a?.A + b?.c!; B = b?.wu(B ; c! ; c); main = 0",
    };
    parse(src, calculus).expect("sample definitions parse").1
}

fn channel() -> impl Strategy<Value = Name> {
    proptest::sample::select(&CHANNELS[..]).prop_map(Name::new)
}

/// Terms valid in `cfg.calculus`; closed with respect to [`sample_env`].
pub fn terms(cfg: GenConfig) -> BoxedStrategy<Process> {
    let webpi = cfg.calculus == Calculus::WebPi;
    let mut leaves: Vec<BoxedStrategy<Process>> = vec![Just(Process::Nil).boxed()];
    if cfg.constants {
        leaves.push(
            proptest::sample::select(&["A", "B"][..])
                .prop_map(Process::constant)
                .boxed(),
        );
    }
    if webpi {
        leaves.push(channel().prop_map(Process::OutputAtom).boxed());
    }
    let leaf = proptest::strategy::Union::new(leaves);

    leaf.prop_recursive(cfg.depth, 48, 3, move |inner| {
        let guarded = guarded(inner.clone(), webpi);
        let mut options: Vec<BoxedStrategy<Process>> = vec![
            guarded.clone(),
            proptest::collection::vec(guarded, 2..=3)
                .prop_map(Process::Sum)
                .boxed(),
            proptest::collection::vec(inner.clone(), 2..=3)
                .prop_map(Process::Par)
                .boxed(),
        ];
        if cfg.restriction {
            options.push(
                (channel(), inner.clone())
                    .prop_map(|(x, p)| Process::Restrict(x, Box::new(p)))
                    .boxed(),
            );
        }
        if cfg.fractions && !webpi {
            options.push(
                (inner.clone(), inner.clone())
                    .prop_map(|(n, d)| Process::fraction(n, d))
                    .boxed(),
            );
        }
        if webpi {
            options.push(
                (inner.clone(), inner, channel())
                    .prop_map(|(b, h, x)| Process::workunit(b, h, x))
                    .boxed(),
            );
        }
        proptest::strategy::Union::new(options)
    })
    .boxed()
}

fn guarded(inner: BoxedStrategy<Process>, webpi: bool) -> BoxedStrategy<Process> {
    if webpi {
        prop_oneof![
            3 => (channel(), inner).prop_map(|(a, p)| Process::Input(a, Box::new(p))),
            1 => channel().prop_map(Process::OutputAtom),
        ]
        .boxed()
    } else {
        (channel(), any::<bool>(), inner)
            .prop_map(|(a, input, p)| {
                if input {
                    Process::Input(a, Box::new(p))
                } else {
                    Process::Output(a, Box::new(p))
                }
            })
            .boxed()
    }
}

/// `n` values drawn from `strategy` by a generator seeded with `seed`.
pub fn sample<S: Strategy>(strategy: &S, n: usize, seed: u64) -> Vec<S::Value> {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &bytes);
    let mut runner = TestRunner::new_with_rng(Config::default(), rng);
    (0..n)
        .map(|_| {
            strategy
                .new_tree(&mut runner)
                .expect("generator never rejects")
                .current()
        })
        .collect()
}

/// Every CCS term with at most `max_ops` operators built from `0`, input
/// and output prefixes, binary `+` of prefixes, binary `|` and `new`, over
/// the given names.
pub fn enumerate_ccs(max_ops: usize, names: &[&str]) -> Vec<Process> {
    let names: Vec<Name> = names.iter().map(Name::new).collect();
    // by_size[n]: terms with exactly n operators; prefixes[n]: the guarded ones
    let mut by_size: Vec<Vec<Process>> = vec![vec![Process::Nil]];
    let mut prefixes: Vec<Vec<Process>> = vec![Vec::new()];
    for n in 1..=max_ops {
        let mut guarded = Vec::new();
        for cont in &by_size[n - 1] {
            for a in &names {
                guarded.push(Process::input(a.clone(), cont.clone()));
                guarded.push(Process::output(a.clone(), cont.clone()));
            }
        }
        let mut all = guarded.clone();
        for body in &by_size[n - 1] {
            for x in &names {
                all.push(Process::restrict(x.clone(), body.clone()));
            }
        }
        for i in 0..n {
            let j = n - 1 - i;
            for l in &by_size[i] {
                for r in &by_size[j] {
                    all.push(Process::Par(vec![l.clone(), r.clone()]));
                }
            }
            for l in &prefixes[i] {
                for r in &prefixes[j] {
                    all.push(Process::Sum(vec![l.clone(), r.clone()]));
                }
            }
        }
        by_size.push(all);
        prefixes.push(guarded);
    }
    by_size.into_iter().flatten().collect()
}
