fn main() {
    std::process::exit(anyon_rg::cli::run(std::env::args_os()));
}
