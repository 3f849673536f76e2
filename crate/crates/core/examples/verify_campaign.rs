// A small exhaustive campaign, its report, and the out-of-hypothesis run
// that turns up the sharpness family.

use fullrank::verify::{run_campaign, CampaignSpec, RunOptions, Theorem};

fn main() {
    let spec = CampaignSpec::new(Theorem::Main, 2, 3, 2).codims(0..=1);
    let report = run_campaign(&spec, &RunOptions::default()).unwrap();
    print!("{}", report.to_text());

    let beyond = CampaignSpec::new(Theorem::Main, 2, 3, 2).codims(2..=2).ranks(1..=1).allow_out_of_hypothesis(true);
    let report = run_campaign(&beyond, &RunOptions::default()).unwrap();
    println!("\ncodim 2: {} findings among {} cases, verdict {:?}", report.counts.findings, report.counts.total, report.verdict);
    if let Some(first) = report.findings.first() {
        print!("first finding:\n{}", first.subspace);
    }

    let square = CampaignSpec::new(Theorem::Pencil, 2, 3, 3);
    let report = run_campaign(&square, &RunOptions::workers(2)).unwrap();
    println!("\npencil 3x3 over GF(2): {:?}", report.counts);
}
