use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = ydlab::cli::dispatch(&args, std::env::var("YDLAB_WORKSPACE").ok());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
