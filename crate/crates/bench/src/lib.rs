//! Workloads shared by the benchmarks.

/// `n` independent synchronising pairs over distinct channels; the silent
/// state space has `2^n` states.
pub fn interleaving_model(n: usize) -> String {
    let pairs: Vec<String> = (0..n).map(|i| format!("c{i}!.0 | c{i}?.0")).collect();
    format!("main = {}", pairs.join(" | "))
}

/// `n` sensor/reader pairs sharing the same channels.
pub fn sensor_array(n: usize) -> String {
    let parts = vec!["S | R"; n].join(" | ");
    format!("S = v!.S + e!.S;\nR = v?.R + e?.{{ S | R / S }};\nmain = {parts}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use reconfig_calc_core::{parse, Calculus};

    #[test]
    fn models_parse() {
        parse(&interleaving_model(3), Calculus::CcsDp).unwrap();
        parse(&sensor_array(2), Calculus::CcsDp).unwrap();
    }
}
