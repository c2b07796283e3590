fn main() {
    std::process::exit(doismol::harness::run_cli(std::env::args_os()));
}
