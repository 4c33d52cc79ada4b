from ..commands import WalkApp
from .expansion import ExpansionModule
from .walking import WalkingModule
from .analysis import AnalysisModule
from .surgery import SurgeryModule
from .survey import SurveyModule

MODULES = (ExpansionModule, WalkingModule, AnalysisModule, SurgeryModule, SurveyModule)


def create_app(prog="digitwalk"):
    app = WalkApp(prog)
    for module in MODULES:
        app.add_module(module(app))

    return app
