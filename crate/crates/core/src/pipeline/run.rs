use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{classify, enumerate_connected, read_graph6_file, ClassRecord, ClassifyOptions};
use crate::error::PipelineError;
use crate::graph::Graph;
use crate::ideal::SuCache;

pub const RECORDS_FILE: &str = "records.jsonl";
pub const SUMMARY_FILE: &str = "summary.csv";
const PROGRESS_FILE: &str = "progress.jsonl";
const CHECKPOINT_FILE: &str = "checkpoint.json";

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub classify: ClassifyOptions,
    /// Thread count; `None` uses `BEI_WORKERS` or the number of CPUs.
    pub workers: Option<usize>,
    /// graph6 input replacing the internal generator.
    pub input: Option<PathBuf>,
    /// Directory for records, summary and checkpoints.
    pub out_dir: Option<PathBuf>,
    pub resume: bool,
    pub checkpoint_every: usize,
    /// Stop after this many records, leaving a checkpoint behind.
    pub stop_after: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            classify: ClassifyOptions::default(),
            workers: None,
            input: None,
            out_dir: None,
            resume: false,
            checkpoint_every: 10_000,
            stop_after: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub n: usize,
    pub generated: usize,
    pub indecomposable_unmixed: usize,
    pub accessible: usize,
    pub strongly_unmixed: usize,
    pub s2: Option<usize>,
    pub equivalence_verified: bool,
    pub complete: bool,
    pub wall_time_secs: f64,
    pub workers: usize,
}

impl RunSummary {
    pub fn csv(&self) -> String {
        let s2 = self.s2.map_or(String::new(), |k| k.to_string());
        format!(
            "n,generated,indecomposable_unmixed,accessible,strongly_unmixed,s2,equivalence_verified,complete,wall_time_secs,workers\n\
             {},{},{},{},{},{},{},{},{:.3},{}\n",
            self.n,
            self.generated,
            self.indecomposable_unmixed,
            self.accessible,
            self.strongly_unmixed,
            s2,
            self.equivalence_verified,
            self.complete,
            self.wall_time_secs,
            self.workers
        )
    }
}

pub struct RunOutcome {
    pub summary: RunSummary,
    pub report: EquivalenceReport,
    pub records: Vec<ClassRecord>,
}

/// Where an interrupted run stopped: the first `records` graphs of the
/// certificate-ordered input are in the progress file, which is `bytes`
/// long.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct Checkpoint {
    n: usize,
    options: ClassifyOptions,
    records: usize,
    bytes: u64,
    last_certificate: String,
}

/// Worker count from `BEI_WORKERS`, else the available parallelism.
pub fn default_workers() -> usize {
    std::env::var("BEI_WORKERS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

/// Classifies every connected graph on `n` vertices and checks that the
/// accessible and strongly unmixed survivors coincide.
pub fn run_pipeline(n: usize, opts: &RunOptions) -> Result<RunOutcome, PipelineError> {
    let start = Instant::now();
    let workers = opts.workers.unwrap_or_else(default_workers).max(1);
    let graphs = match &opts.input {
        Some(path) => read_graph6_file(path, n)?,
        None => enumerate_connected(n)?,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| PipelineError::Io(std::io::Error::other(e)))?;
    let cache = SuCache::global();

    let mut records: Vec<ClassRecord> = Vec::with_capacity(graphs.len());
    let mut progress: Option<BufWriter<File>> = None;
    if let Some(dir) = &opts.out_dir {
        fs::create_dir_all(dir)?;
        let done = if opts.resume {
            resume_from(dir, n, opts, &graphs)?
        } else {
            Vec::new()
        };
        let file = OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(!opts.resume)
            .append(opts.resume)
            .open(dir.join(PROGRESS_FILE))?;
        progress = Some(BufWriter::new(file));
        records = done;
    }

    let every = opts.checkpoint_every.max(1);
    let limit = opts
        .stop_after
        .map_or(graphs.len(), |s| s.min(graphs.len()));
    while records.len() < limit {
        let from = records.len();
        let to = (from + every).min(limit);
        let chunk: Vec<ClassRecord> = pool.install(|| {
            graphs[from..to]
                .par_iter()
                .map(|g| classify(g, &opts.classify, cache))
                .collect::<Result<_, _>>()
        })?;
        if let (Some(w), Some(dir)) = (progress.as_mut(), &opts.out_dir) {
            for rec in &chunk {
                serde_json::to_writer(&mut *w, rec)?;
                w.write_all(b"\n")?;
            }
            w.flush()?;
            w.get_ref().sync_data()?;
            let bytes = w.get_ref().metadata()?.len();
            let last = chunk
                .last()
                .expect("nonempty chunk")
                .certificate
                .as_str()
                .to_string();
            write_checkpoint(
                dir,
                &Checkpoint {
                    n,
                    options: opts.classify,
                    records: to,
                    bytes,
                    last_certificate: last,
                },
            )?;
        }
        records.extend(chunk);
    }

    let complete = records.len() == graphs.len();
    let report = verify_equivalence(&records);
    let summary = summarize(n, &records, &report, opts, complete, start, workers);
    if let Some(dir) = &opts.out_dir {
        drop(progress);
        if complete {
            fs::rename(dir.join(PROGRESS_FILE), dir.join(RECORDS_FILE))?;
            let _ = fs::remove_file(dir.join(CHECKPOINT_FILE));
            fs::write(dir.join(SUMMARY_FILE), summary.csv())?;
        }
    }
    Ok(RunOutcome {
        summary,
        report,
        records,
    })
}

fn summarize(
    n: usize,
    records: &[ClassRecord],
    report: &EquivalenceReport,
    opts: &RunOptions,
    complete: bool,
    start: Instant,
    workers: usize,
) -> RunSummary {
    let count = |f: &dyn Fn(&ClassRecord) -> bool| records.iter().filter(|r| f(r)).count();
    RunSummary {
        n,
        generated: records.len(),
        indecomposable_unmixed: count(&|r| r.kept()),
        accessible: count(&|r| r.accessible == Some(true)),
        strongly_unmixed: count(&|r| r.strongly_unmixed == Some(true)),
        s2: opts.classify.s2.then(|| count(&|r| r.s2 == Some(true))),
        equivalence_verified: report.verified(),
        complete,
        wall_time_secs: start.elapsed().as_secs_f64(),
        workers,
    }
}

fn write_checkpoint(dir: &Path, cp: &Checkpoint) -> Result<(), PipelineError> {
    let tmp = dir.join(format!("{CHECKPOINT_FILE}.tmp"));
    fs::write(&tmp, serde_json::to_vec(cp)?)?;
    fs::rename(&tmp, dir.join(CHECKPOINT_FILE))?;
    Ok(())
}

/// Records already persisted by an interrupted run, after truncating the
/// progress file to the last checkpoint.
fn resume_from(
    dir: &Path,
    n: usize,
    opts: &RunOptions,
    graphs: &[Graph],
) -> Result<Vec<ClassRecord>, PipelineError> {
    let path = dir.join(CHECKPOINT_FILE);
    if !path.exists() {
        let _ = fs::remove_file(dir.join(PROGRESS_FILE));
        return Ok(Vec::new());
    }
    let cp: Checkpoint = serde_json::from_slice(&fs::read(&path)?)?;
    if cp.n != n || cp.options != opts.classify || cp.records > graphs.len() {
        return Err(PipelineError::Checkpoint(format!(
            "checkpoint is for n = {} with {:?}, this run is n = {n} with {:?}",
            cp.n, cp.options, opts.classify
        )));
    }
    let file = OpenOptions::new()
        .write(true)
        .open(dir.join(PROGRESS_FILE))?;
    file.set_len(cp.bytes)?;
    drop(file);
    let done = read_records(&dir.join(PROGRESS_FILE))?;
    let last = done.last().map(|r| r.certificate.as_str());
    if done.len() != cp.records || last != Some(cp.last_certificate.as_str()) {
        return Err(PipelineError::Checkpoint(format!(
            "progress file holds {} records, checkpoint expects {} ending at {}",
            done.len(),
            cp.records,
            cp.last_certificate
        )));
    }
    Ok(done)
}

/// One record per line.
pub fn read_records(path: &Path) -> Result<Vec<ClassRecord>, PipelineError> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}

/// Differences between the stage sets, as graph6 lines.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub records: usize,
    pub accessible_not_strongly_unmixed: Vec<String>,
    pub strongly_unmixed_not_accessible: Vec<String>,
    /// Present when (S2) was evaluated.
    pub accessible_not_s2: Option<Vec<String>>,
    pub s2_not_accessible: Option<Vec<String>>,
}

impl EquivalenceReport {
    pub fn verified(&self) -> bool {
        self.accessible_not_strongly_unmixed.is_empty()
            && self.strongly_unmixed_not_accessible.is_empty()
            && self.accessible_not_s2.as_ref().is_none_or(Vec::is_empty)
            && self.s2_not_accessible.as_ref().is_none_or(Vec::is_empty)
    }
}

/// The accessible set against the strongly unmixed set, and against the
/// (S2) set when any record carries it.
pub fn verify_equivalence(records: &[ClassRecord]) -> EquivalenceReport {
    let diff =
        |a: &dyn Fn(&ClassRecord) -> bool, b: &dyn Fn(&ClassRecord) -> bool| -> Vec<String> {
            records
                .iter()
                .filter(|r| a(r) && !b(r))
                .map(|r| r.graph6.clone())
                .collect()
        };
    let acc = |r: &ClassRecord| r.accessible == Some(true);
    let su = |r: &ClassRecord| r.strongly_unmixed == Some(true);
    let s2 = |r: &ClassRecord| r.s2 == Some(true);
    let with_s2 = records.iter().any(|r| r.s2.is_some());
    EquivalenceReport {
        records: records.len(),
        accessible_not_strongly_unmixed: diff(&acc, &su),
        strongly_unmixed_not_accessible: diff(&su, &acc),
        accessible_not_s2: with_s2.then(|| diff(&acc, &s2)),
        s2_not_accessible: with_s2.then(|| diff(&s2, &acc)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertices() {
        let out = run_pipeline(
            3,
            &RunOptions {
                workers: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(out.summary.generated, 2);
        assert_eq!(out.summary.indecomposable_unmixed, 1);
        assert_eq!(out.summary.accessible, 1);
        assert!(out.summary.equivalence_verified);
        let k3 = out.records.iter().find(|r| r.edge_count == 3).unwrap();
        assert_eq!(k3.strongly_unmixed, Some(true));
        let p3 = out.records.iter().find(|r| r.edge_count == 2).unwrap();
        assert!(!p3.indecomposable);
    }

    #[test]
    fn planted_mismatch_is_reported() {
        let mut records = run_pipeline(
            4,
            &RunOptions {
                workers: Some(1),
                ..Default::default()
            },
        )
        .unwrap()
        .records;
        assert!(verify_equivalence(&records).verified());
        let target = records
            .iter_mut()
            .find(|r| r.accessible == Some(true))
            .unwrap();
        target.strongly_unmixed = Some(false);
        let g6 = target.graph6.clone();
        let report = verify_equivalence(&records);
        assert!(!report.verified());
        assert_eq!(report.accessible_not_strongly_unmixed, vec![g6]);
    }

    #[test]
    fn empty_records_verify() {
        let report = verify_equivalence(&[]);
        assert!(report.verified());
        assert_eq!(report.accessible_not_s2, None);
    }

    #[test]
    fn checkpoint_resume_matches_straight_run() {
        let straight = tempfile::tempdir().unwrap();
        let broken = tempfile::tempdir().unwrap();
        let base = RunOptions {
            workers: Some(2),
            checkpoint_every: 7,
            ..Default::default()
        };
        run_pipeline(
            5,
            &RunOptions {
                out_dir: Some(straight.path().into()),
                ..base.clone()
            },
        )
        .unwrap();
        let first = run_pipeline(
            5,
            &RunOptions {
                out_dir: Some(broken.path().into()),
                stop_after: Some(10),
                ..base.clone()
            },
        )
        .unwrap();
        assert!(!first.summary.complete);
        assert!(broken.path().join(CHECKPOINT_FILE).exists());
        run_pipeline(
            5,
            &RunOptions {
                out_dir: Some(broken.path().into()),
                resume: true,
                ..base.clone()
            },
        )
        .unwrap();
        let a = fs::read(straight.path().join(RECORDS_FILE)).unwrap();
        let b = fs::read(broken.path().join(RECORDS_FILE)).unwrap();
        assert_eq!(a, b);
        let mismatched = RunOptions {
            out_dir: Some(broken.path().into()),
            stop_after: Some(3),
            ..base.clone()
        };
        run_pipeline(5, &mismatched).unwrap();
        let other = RunOptions {
            out_dir: Some(broken.path().into()),
            resume: true,
            classify: ClassifyOptions {
                s2: true,
                complex: false,
            },
            ..base
        };
        assert!(matches!(
            run_pipeline(5, &other),
            Err(PipelineError::Checkpoint(_))
        ));
    }
}
