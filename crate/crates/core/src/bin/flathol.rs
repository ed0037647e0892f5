fn main() {
    std::process::exit(flat_holonomy::cli::run(std::env::args_os()));
}
