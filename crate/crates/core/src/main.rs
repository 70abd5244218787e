use std::io::{self, BufWriter};

fn main() {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = flowroots::cli::run(std::env::args_os(), &mut io::stdin(), &mut out, &mut io::stderr());
    drop(out);
    std::process::exit(code);
}
