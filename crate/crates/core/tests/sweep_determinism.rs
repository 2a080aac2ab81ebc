use gpcover::harness::{sweep, SweepOptions};
use gpcover::Execution;

#[test]
fn parallel_and_sequential_agree() {
    let seq = sweep(&SweepOptions { execution: Execution::Sequential, ..SweepOptions::new(20) }).unwrap();
    for jobs in [None, Some(1), Some(3)] {
        let par = sweep(&SweepOptions { jobs, ..SweepOptions::new(20) }).unwrap();
        assert_eq!(par.records.len(), seq.records.len());
        for (a, b) in par.records.iter().zip(&seq.records) {
            assert!(a.same_outcome(b), "{a:?} vs {b:?}");
        }
    }
    assert!(seq.is_clean());
    assert!(seq.records.windows(2).all(|w| (w[0].n, w[0].k) < (w[1].n, w[1].k)));
}
