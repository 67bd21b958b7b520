fn main() {
    std::process::exit(tcore_cli::run(std::env::args_os()));
}
