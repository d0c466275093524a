fn main() {
    let code = mltt_cli::run(std::env::args());
    std::process::exit(code);
}
