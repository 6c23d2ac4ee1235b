//! Drives the command-line front end in-process and reads back the
//! certificates it emits.

use ramsey_sat::certificate::Certificate;
use ramsey_sat::cli::run;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("ramsey-sat-example");
    std::fs::create_dir_all(&dir)?;
    let pattern = dir.join("c4.cg");
    std::fs::write(&pattern, ramsey_sat::pattern::c4_diagonals().to_cg())?;
    let pattern = pattern.to_str().ok_or("non-utf8 path")?;

    let commands: [&[&str]; 4] = [
        &["verify", "saturated", "--in", pattern, "--k", "3"],
        &["oracle", "g", "--n", "3", "--s", "2", "--t", "2", "--n-max", "6"],
        &["construct", "gnp", "--N", "12", "--p", "0.3", "--seed", "42"],
        &["verify", "ssat", "--in", pattern, "--k", "4"],
    ];
    for args in commands {
        let out = run(std::iter::once("ramsey-sat").chain(args.iter().copied()));
        let cert = Certificate::parse(&out.stdout)?;
        println!("{} -> exit {}", args.join(" "), out.code);
        println!("  {}", cert.body());
    }
    Ok(())
}
