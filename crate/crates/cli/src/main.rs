fn main() {
    std::process::exit(flagj_cli::run(std::env::args_os()));
}
