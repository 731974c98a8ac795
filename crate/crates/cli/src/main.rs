fn main() {
    std::process::exit(tietze_cli::run_cli(std::env::args_os()));
}
