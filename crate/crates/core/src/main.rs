fn main() {
    std::process::exit(posalg::cli::run(std::env::args_os()));
}
