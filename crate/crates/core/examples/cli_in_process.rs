//! Driving the command-line front end from Rust.

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cutnum::cli::run(
        ["cutnum", "harvey", "certify", "--m", "4", "--n", "1,1,1,1"],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cutnum::cli::run(
        ["cutnum", "harvey", "certify", "--m", "2", "--n", "2,2"],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&err));
    println!("exit code {code}");
}
