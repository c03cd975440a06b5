use std::io::Write;

fn main() {
    let out = nilorbit_cli::dispatch(std::env::args_os());
    print!("{}", out.stdout);
    std::io::stdout().flush().ok();
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
