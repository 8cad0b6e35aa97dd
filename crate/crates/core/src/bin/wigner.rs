use std::io;

fn main() {
    let code = wigner_entropy::cli::main_with_args(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
