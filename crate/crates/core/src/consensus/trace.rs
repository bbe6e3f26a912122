use std::fmt::Write as _;

use super::RunResult;
use crate::error::{Error, Result};
use crate::graph::IdBase;

/// Renders the recorded run as a tab-separated table.
///
/// One block of four rows (`x`, `y`, `z`, `w`) per round `k`, one column per
/// node, with node labels and set members shifted by `base`:
///
/// ```text
/// k   P     v1     v2
/// 0   x[0]  {1}    {2}
///     y[0]  1      1
///     z[0]  {}     {}
///     w[0]  False  False
/// ```
pub fn trace_table(result: &RunResult, base: IdBase) -> Result<String> {
    let history = result.history.as_ref().ok_or(Error::TraceNotRecorded)?;
    let offset = base.offset();
    let n = result.final_states.len();

    let mut out = String::from("k\tP");
    for v in 0..n {
        let _ = write!(out, "\tv{}", v + offset);
    }
    out.push('\n');

    for snap in history {
        let k = snap.round;
        let rows: [(char, Vec<String>); 4] = [
            (
                'x',
                snap.states.iter().map(|s| s.reach.display_with_offset(offset)).collect(),
            ),
            ('y', snap.states.iter().map(|s| s.max_reach.to_string()).collect()),
            (
                'z',
                snap.states
                    .iter()
                    .map(|s| s.candidates.display_with_offset(offset))
                    .collect(),
            ),
            (
                'w',
                snap.states
                    .iter()
                    .map(|s| if s.stable { "True" } else { "False" }.to_string())
                    .collect(),
            ),
        ];
        for (i, (param, cells)) in rows.iter().enumerate() {
            if i == 0 {
                let _ = write!(out, "{k}");
            }
            let _ = writeln!(out, "\t{param}[{k}]\t{}", cells.join("\t"));
        }
    }
    Ok(out)
}
