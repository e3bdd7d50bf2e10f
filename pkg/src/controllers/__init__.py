from src.controllers.bench_controller import BenchController
from src.controllers.fft_controller import FFTController
from src.controllers.period_controller import PeriodController
from src.controllers.qft_controller import QFTController
from src.controllers.simulate_controller import SimulateController

__all__ = ["BenchController", "FFTController", "PeriodController", "QFTController", "SimulateController"]
