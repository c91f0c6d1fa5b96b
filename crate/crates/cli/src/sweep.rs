//! Parameter sweeps on a worker pool.

use rayon::prelude::*;

use crate::config::{Reduction, RunConfig, SweepSpec};
use crate::output::{record_cells, Cell, Table, RECORD_COLUMNS};
use crate::run::{run, Failure, RunOutput};

/// Runs every swept value; rows come out in ascending value order whatever
/// the completion order. A failing point fills its row's `error` column.
pub fn sweep(base: &RunConfig, spec: &SweepSpec, jobs: Option<usize>) -> anyhow::Result<Table> {
    let mut values = spec.values.clone();
    values.sort_by(f64::total_cmp);
    let points: Vec<RunConfig> = values.iter().map(|&x| base.with_param(&spec.param, x)).collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n);
    }
    let pool = builder.build()?;
    let results: Vec<Result<RunOutput, Failure>> = pool.install(|| points.par_iter().map(run).collect());

    let mut columns = vec![spec.param.clone()];
    match spec.reduction {
        Reduction::FinalPe => columns.push("final_pe".into()),
        Reduction::FinalMy => columns.push("final_my".into()),
        Reduction::FullTrajectory => columns.extend(RECORD_COLUMNS.iter().map(|c| c.to_string())),
    }
    columns.push("error".into());
    let width = columns.len();

    let mut table = Table { columns, ..Table::default() };
    for (x, result) in values.iter().zip(results) {
        match result {
            Ok(out) => {
                for w in out.warnings {
                    table.warnings.push(format!("{} = {x}: {w}", spec.param));
                }
                let last = out.records.last().expect("runs produce at least two samples");
                match spec.reduction {
                    Reduction::FinalPe => table.rows.push(vec![Cell::Num(*x), Cell::Num(last.obs.pe), Cell::Text(String::new())]),
                    Reduction::FinalMy => table.rows.push(vec![Cell::Num(*x), Cell::Num(last.obs.my), Cell::Text(String::new())]),
                    Reduction::FullTrajectory => {
                        for r in &out.records {
                            let mut row = vec![Cell::Num(*x)];
                            row.extend(record_cells(r));
                            row.push(Cell::Text(String::new()));
                            table.rows.push(row);
                        }
                    }
                }
            }
            Err(e) => {
                let mut row = vec![Cell::Num(*x)];
                row.extend((2..width).map(|_| Cell::Text(String::new())));
                row.push(Cell::Text(e.message().to_string()));
                table.rows.push(row);
            }
        }
    }
    Ok(table)
}
