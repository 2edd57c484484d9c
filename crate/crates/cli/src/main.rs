fn main() {
    std::process::exit(transvect_cli::run(std::env::args_os()));
}
