use std::io::Write;

fn main() {
    let code = ffheight::cli::dispatch(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
