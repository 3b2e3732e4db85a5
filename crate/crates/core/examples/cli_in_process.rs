//! Drive the command-line interface without spawning a process.

use asmkey::cli::run;

fn main() {
    let matrix = "0 1 0\n1 -1 1\n0 1 0\n";
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["asmkey", "key", "--trace"], &mut matrix.as_bytes(), &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");

    let mut out = Vec::new();
    let code = run(
        ["asmkey", "sweep", "--set", "312&321", "--max-n", "6", "--format", "csv"],
        &mut std::io::empty(),
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
}
