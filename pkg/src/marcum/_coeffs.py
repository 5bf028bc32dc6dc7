"""Expansion coefficient tables (generated by tools/gen_coeffs.py; do not edit)."""

KMAX = 24

# u_k(t) = sum_i U_COEFFS[k][i] * t**i
U_COEFFS = (
    (1.0,),
    (0.0, 0.125, 0.0, -0.20833333333333334,),
    (0.0, 0.0, 0.0703125, 0.0, -0.4010416666666667, 0.0, 0.3342013888888889,),
    (0.0, 0.0, 0.0, 0.0732421875, 0.0, -0.8912109375, 0.0, 1.8464626736111112, 0.0, -1.0258125964506173,),
    (0.0, 0.0, 0.0, 0.0, 0.112152099609375, 0.0, -2.3640869140625, 0.0, 8.78912353515625, 0.0, -11.207002616222994, 0.0, 4.669584423426247,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.22710800170898438, 0.0, -7.368794359479632, 0.0, 42.53499874538846, 0.0, -91.81824154324002, 0.0, 84.63621767460073, 0.0, -28.212072558200244,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5725014209747314, 0.0, -26.491430486951554, 0.0, 218.1905117442116, 0.0, -699.5796273761325, 0.0, 1059.9904525279999, 0.0, -765.2524681411817, 0.0, 212.57013003921713,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.7277275025844574, 0.0, -108.09091978839466, 0.0, 1200.9029132163525, 0.0, -5305.646978613403, 0.0, 11655.393336864534, 0.0, -13586.550006434138, 0.0, 8061.722181737309, 0.0, -1919.457662318407,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 6.074042001273483, 0.0, -493.915304773088, 0.0, 7109.514302489364, 0.0, -41192.65496889755, 0.0, 122200.46498301746, 0.0, -203400.17728041555, 0.0, 192547.00123253153, 0.0, -96980.59838863752, 0.0, 20204.29133096615,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 24.380529699556064, 0.0, -2499.8304818112097, 0.0, 45218.76898136273, 0.0, -331645.1724845636, 0.0, 1268365.2733216248, 0.0, -2813563.226586534, 0.0, 3763271.297656404, 0.0, -2998015.9185381066, 0.0, 1311763.6146629772, 0.0, -242919.18790055133,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 110.01714026924674, 0.0, -13886.08975371704, 0.0, 308186.4046126624, 0.0, -2785618.1280864547, 0.0, 13288767.166421818, 0.0, -37567176.66076335, 0.0, 66344512.27472903, 0.0, -74105148.21153265, 0.0, 50952602.49266464, 0.0, -19706819.118432228, 0.0, 3284469.853072038,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 551.3358961220206, 0.0, -84005.43360302408, 0.0, 2243768.1779224495, 0.0, -24474062.72573873, 0.0, 142062907.7975331, 0.0, -495889784.2750303, 0.0, 1106842816.8230145, 0.0, -1621080552.1083372, 0.0, 1553596899.57058, 0.0, -939462359.6815784, 0.0, 325573074.18576574, 0.0, -49329253.66450996,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3038.090510922384, 0.0, -549842.3275722887, 0.0, 17395107.553978164, 0.0, -225105661.88941526, 0.0, 1559279864.8792574, 0.0, -6563293792.619285, 0.0, 17954213731.1556, 0.0, -33026599749.800724, 0.0, 41280185579.753975, 0.0, -34632043388.158775, 0.0, 18688207509.295826, 0.0, -5866481492.051847, 0.0, 814789096.1183121,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 18257.755474293175, 0.0, -3871833.442572613, 0.0, 143157876.71888897, 0.0, -2167164983.223795, 0.0, 17634730606.83497, 0.0, -87867072178.02327, 0.0, 287900649906.1506, 0.0, -645364869245.3765, 0.0, 1008158106865.3821, 0.0, -1098375156081.2233, 0.0, 819218669548.5773, 0.0, -399096175224.4665, 0.0, 114498237732.0258, 0.0, -14679261247.695616,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 118838.42625678325, 0.0, -29188388.122220814, 0.0, 1247009293.5127103, 0.0, -21822927757.529224, 0.0, 205914503232.41, 0.0, -1196552880196.1816, 0.0, 4612725780849.132, 0.0, -12320491305598.287, 0.0, 23348364044581.84, 0.0, -31667088584785.16, 0.0, 30565125519935.32, 0.0, -20516899410934.438, 0.0, 9109341185239.898, 0.0, -2406297900028.504, 0.0, 286464035717.679,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 832859.3040162893, 0.0, -234557963.52225152, 0.0, 11465754899.448236, 0.0, -229619372968.24646, 0.0, 2485000928034.0854, 0.0, -16634824724892.48, 0.0, 74373122908679.14, 0.0, -232604831188939.94, 0.0, 523054882578444.6, 0.0, -857461032982895.0, 0.0, 1026955196082762.5, 0.0, -889496939881026.5, 0.0, 542739664987659.75, 0.0, -221349638702525.2, 0.0, 54177510755106.05, 0.0, -6019723417234.006,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 6252951.493434797, 0.0, -2001646928.1917763, 0.0, 110997405139.17902, 0.0, -2521558474912.8545, 0.0, 31007436472896.46, 0.0, -236652530451649.25, 0.0, 1212675804250347.5, 0.0, -4379325838364015.5, 0.0, 1.1486706978449752e+16, 0.0, -2.2268225133911144e+16, 0.0, 3.213827526858624e+16, 0.0, -3.4447226006485144e+16, 0.0, 2.705471130619708e+16, 0.0, -1.5129826322457682e+16, 0.0, 5705782159023671.0, 0.0, -1301012723549699.5, 0.0, 135522158703093.69,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 50069589.531988926, 0.0, -18078220384.658062, 0.0, 1128709145410.874, 0.0, -28863837631414.76, 0.0, 400044457043036.25, 0.0, -3450385511846272.5, 0.0, 2.0064271476309532e+16, 0.0, -8.270945651585064e+16, 0.0, 2.4960365126160426e+17, 0.0, -5.62631788074636e+17, 0.0, 9.575335098169139e+17, 0.0, -1.2336116931960694e+18, 0.0, 1.1961991142756308e+18, 0.0, -8.592577980317548e+17, 0.0, 4.4347954614171904e+17, 0.0, -1.5552983504313904e+17, 0.0, 3.3192764720355224e+16, 0.0, -3254192619642669.0,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 425939216.5047669, 0.0, -172283238717.3505, 0.0, 12030115826419.191, 0.0, -343965304743075.94, 0.0, 5335106978708839.0, 0.0, -5.1605093193485224e+16, 0.0, 3.37667624979061e+17, 0.0, -1.5736434765189599e+18, 0.0, 5.402894876715982e+18, 0.0, -1.3970803516443374e+19, 0.0, 2.757282981650519e+19, 0.0, -4.178861444656839e+19, 0.0, 4.859942729324836e+19, 0.0, -4.301555703831444e+19, 0.0, 2.846521225167657e+19, 0.0, -1.3639420410571592e+19, 0.0, 4.47020096401231e+18, 0.0, -8.966114215270463e+17, 0.0, 8.30195760673191e+16,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3836255180.2304335, 0.0, -1727704012352.9995, 0.0, 134124169151806.39, 0.0, -4261935510426898.5, 0.0, 7.351663610930971e+16, 0.0, -7.921651119323832e+17, 0.0, 5.789887667664653e+18, 0.0, -3.025566598990372e+19, 0.0, 1.1707490535797259e+20, 0.0, -3.434621399768417e+20, 0.0, 7.756704953461136e+20, 0.0, -1.360203777284994e+21, 0.0, 1.8571089321463453e+21, 0.0, -1.9677247077053125e+21, 0.0, 1.6016898573693598e+21, 0.0, -9.824438427689858e+20, 0.0, 4.392792200888712e+20, 0.0, -1.351217503435996e+20, 0.0, 2.5563802960529236e+19, 0.0, -2.242438856186775e+18,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 36468400807.06556, 0.0, -18187262038511.04, 0.0, 1561312393048467.2, 0.0, -5.48403360388329e+16, 0.0, 1.0461721131134344e+18, 0.0, -1.2483700995047234e+19, 0.0, 1.0126774169536592e+20, 0.0, -5.8917941350694964e+20, 0.0, 2.548961114664972e+21, 0.0, -8.405915817108351e+21, 0.0, 2.1487414815055883e+22, 0.0, -4.302534303482379e+22, 0.0, 6.783661642951883e+22, 0.0, -8.423222750084323e+22, 0.0, 8.19433100543513e+22, 0.0, -6.173206302884415e+22, 0.0, 3.528435843903409e+22, 0.0, -1.4787743528433614e+22, 0.0, 4.285296082829494e+21, 0.0, -7.671943936729004e+20, 0.0, 6.393286613940837e+19,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 364901081884.98334, 0.0, -200524401236271.12, 0.0, 1.894406984252143e+16, 0.0, -7.319501491566134e+17, 0.0, 1.5365025218443373e+19, 0.0, -2.0197335419300872e+20, 0.0, 1.8081594057131945e+21, 0.0, -1.1640246461465369e+22, 0.0, 5.591591380366263e+22, 0.0, -2.0566149136271542e+23, 0.0, 5.8965434619782445e+23, 0.0, -1.3337178907798302e+24, 0.0, 2.3967237744351682e+24, 0.0, -3.430872898515746e+24, 0.0, 3.905264103536985e+24, 0.0, -3.511096528332644e+24, 0.0, 2.461506085403875e+24, 0.0, -1.3170969618092387e+24, 0.0, 5.194289094766812e+23, 0.0, -1.4228394823321413e+23, 0.0, 2.417461500896379e+22, 0.0, -1.91862023880665e+21,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3833534661393.9443, 0.0, -2310915976132356.5, 0.0, 2.3920280120269997e+17, 0.0, -1.0121818379942089e+19, 0.0, 2.3275346258089414e+20, 0.0, -3.3544689122226785e+21, 0.0, 3.297557757461478e+22, 0.0, -2.336107524486965e+23, 0.0, 1.238524103792452e+24, 0.0, -5.0463598652544e+24, 0.0, 1.6103128541137314e+25, 0.0, -4.077501349206541e+25, 0.0, 8.26258535798955e+25, 0.0, -1.3459193994556415e+26, 0.0, 1.7635713272326644e+26, 0.0, -1.8526731041549917e+26, 0.0, 1.548092083577385e+26, 0.0, -1.0148048982766395e+26, 0.0, 5.103920268388802e+25, 0.0, -1.9006807535664433e+25, 0.0, 4.936185283790662e+24, 0.0, -7.980021228256559e+23, 0.0, 6.04547062746709e+22,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 42189715702840.97, 0.0, -2.778481101311081e+16, 0.0, 3.1385283211499996e+18, 0.0, -1.4486387749510863e+20, 0.0, 3.6341499869780876e+21, 0.0, -5.7179919065432055e+22, 0.0, 6.144339925144987e+23, 0.0, -4.766924608251481e+24, 0.0, 2.774466490672939e+25, 0.0, -1.2449342046124282e+26, 0.0, 4.392130563430048e+26, 0.0, -1.2355529146787609e+27, 0.0, 2.7982068996977173e+27, 0.0, -5.131998439010333e+27, 0.0, 7.641216535678268e+27, 0.0, -9.228395023257356e+27, 0.0, 8.999255845917453e+27, 0.0, -7.02322235515725e+27, 0.0, 4.322773732100187e+27, 0.0, -2.050902994929233e+27, 0.0, 7.234243234844319e+26, 0.0, -1.7860680966743495e+26, 0.0, 2.753863007576946e+25, 0.0, -1.9955529040412654e+24,),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 485401468685290.06, 0.0, -3.4792991439250445e+17, 0.0, 4.273207395701127e+19, 0.0, -2.1435653415108537e+21, 0.0, 5.844687629283339e+22, 0.0, -1.0000750138961727e+24, 0.0, 1.1699189691874474e+25, 0.0, -9.896648661695488e+25, 0.0, 6.29370256208713e+26, 0.0, -3.0939194683063286e+27, 0.0, 1.1998211967644424e+28, 0.0, -3.7252346341093444e+28, 0.0, 9.358117764887965e+28, 0.0, -1.9153963148099324e+29, 0.0, 3.206650343980748e+29, 0.0, -4.395132918078325e+29, 0.0, 4.9215508698387624e+29, 0.0, -4.4775348387950634e+29, 0.0, 3.277658265637452e+29, 0.0, -1.9012207767547338e+29, 0.0, 8.536184882279286e+28, 0.0, -2.8599776383548e+28, 0.0, 6.728957650918171e+27, 0.0, -9.916401268407057e+26, 0.0, 6.886389769727123e+25,),
)

# f_{j,k}(u) = u**(j + 2k) * sum_i F_COEFFS[j, k][i] * u**(2i)
F_COEFFS = {
    (0, 0): (1.0,),
    (1, 0): (0.5, 0.16666666666666666,),
    (0, 1): (0.125, 0.0, -0.20833333333333334,),
    (2, 0): (-0.125, 0.0, 0.20833333333333334,),
    (1, 1): (-0.0625, 0.14583333333333334, 0.5208333333333334, -0.6597222222222222,),
    (0, 2): (0.0703125, 0.0, -0.4010416666666667, 0.0, 0.3342013888888889,),
    (3, 0): (0.0625, -0.05416666666666667, -0.3125, 0.28935185185185186,),
    (2, 1): (0.046875, -0.25, -0.6979166666666666, 2.5, -1.6059027777777777,),
    (1, 2): (-0.10546875, 0.15234375, 1.4036458333333333, -1.6710069444444444, -1.8381076388888888, 2.060908564814815,),
    (0, 3): (0.0732421875, 0.0, -0.8912109375, 0.0, 1.8464626736111112, 0.0, -1.0258125964506173,),
    (4, 0): (-0.0390625, 0.08333333333333333, 0.3663194444444444, -0.8333333333333334, 0.42390046296296297,),
    (3, 1): (-0.0390625, 0.3421875, 0.7291666666666666, -5.671296296296297, 8.1640625, -3.5238233024691357,),
    (2, 2): (0.1318359375, -0.421875, -2.8623046875, 8.020833333333334, 1.0777994791666667, -14.036458333333334, 8.090458622685185,),
    (1, 3): (-0.18310546875, 0.23193359375, 4.01044921875, -4.60458984375, -12.002007378472221, 13.232982494212964, 8.719407069830247, -9.403282134130658,),
    (0, 4): (0.112152099609375, 0.0, -2.3640869140625, 0.0, 8.78912353515625, 0.0, -11.207002616222994, 0.0, 4.669584423426247,),
    (5, 0): (0.02734375, -0.10145089285714286, -0.3828125, 1.6061921296296295, -1.7903645833333333, 0.6414448302469136,),
    (4, 1): (0.0341796875, -0.4270833333333333, -0.5979817708333334, 10.208333333333334, -24.38530815972222, 22.48263888888889, -7.314875096450617,),
    (3, 2): (-0.15380859375, 0.79892578125, 4.59033203125, -22.751985677083333, 14.934624565972221, 42.52666256751543, -65.69146050347223, 25.746658387988685,),
    (2, 3): (0.3204345703125, -0.87890625, -10.46416015625, 26.736328125, 29.225667317708332, -103.40190972222223, 17.13107036072531, 92.32313368055556, -50.99143448189943,),
    (1, 4): (-0.3925323486328125, 0.4673004150390625, 13.00247802734375, -14.578535970052084, -65.91842651367188, 71.77784220377605, 106.46652485411845, -113.93785993160044, -53.700220869401846, 56.81327715168601,),
    (0, 5): (0.22710800170898438, 0.0, -7.368794359479632, 0.0, 42.53499874538846, 0.0, -91.81824154324002, 0.0, 84.63621767460073, 0.0, -28.212072558200244,),
    (6, 0): (-0.0205078125, 0.11354166666666667, 0.36983072916666665, -2.576388888888889, 4.6821108217592595, -3.560763888888889, 0.9919986175411523,),
    (5, 1): (-0.03076171875, 0.5066545758928571, 0.29326171875, -16.04466300843254, 56.15677445023148, -82.37282383294753, 56.160933883101855, -14.66940546231996,),
    (4, 2): (0.17303466796875, -1.27734375, -6.361572265625, 50.011935763888886, -73.55933973524306, -70.02633101851852, 271.3406605661651, -242.71375868055554, 72.41271847069508,),
    (3, 3): (-0.48065185546875, 2.11090087890625, 21.0254150390625, -89.87633409288195, -15.28445095486111, 411.04911024305557, -389.3215256679205, -293.92095419801313, 567.7231588481385, -213.0247079633827,),
    (2, 4): (0.8831977844238281, -2.2430419921875, -40.88886337280273, 99.291650390625, 222.9227086385091, -632.81689453125, -205.55324667471427, 1232.7702877845293, -339.1285687513312, -728.4551700544946, 393.2179216560186,),
    (1, 5): (-1.0219860076904297, 1.173391342163086, 47.89716333661761, -52.809692909604024, -361.54748933580186, 389.90415516606083, 964.0915362040201, -1025.3036972328468, -1057.9527209325092, 1114.3768660489097, 409.07505209390354, -427.88310046603704,),
    (0, 6): (0.5725014209747314, 0.0, -26.491430486951554, 0.0, 218.1905117442116, 0.0, -699.5796273761325, 0.0, 1059.9904525279999, 0.0, -765.2524681411817, 0.0, 212.57013003921713,),
    (7, 0): (0.01611328125, -0.1219695560515873, -0.33297526041666664, 3.7101836350859787, -9.712462625385802, 11.698143727494855, -6.8153513213734565, 1.5583573120284637,),
    (6, 1): (0.0281982421875, -0.58203125, 0.19236328125, 23.032335069444443, -110.33599717881944, 227.7450810185185, -243.01300676761832, 131.66775173611111, -28.734679254811812,),
    (5, 2): (-0.190338134765625, 1.8524126325334822, 7.9220947265625, -94.17471516927084, 221.09830050998264, 13.578712293836805, -765.0372254171489, 1204.5108913845486, -777.2272500874084, 187.66711848589946,),
    (4, 3): (0.6608963012695312, -4.08935546875, -36.04327646891276, 229.6779296875, -150.64704827202692, -1115.023654513889, 2175.9328758333936, -176.7817041216564, -2817.564374455372, 2651.5545930587705, -757.6768784769387,),
    (3, 4): (-1.6191959381103516, 6.517438888549805, 97.29213905334473, -384.7201304711236, -422.4613227844238, 2925.81622249462, -1437.2810672241965, -5929.61635756316, 6678.964970631854, 1992.7516382310725, -5560.599501221268, 2034.9551693024277,),
    (2, 5): (2.8104615211486816, -6.813240051269531, -175.5926583153861, 412.65248413085936, 1483.698386529892, -3828.149887084961, -3429.1824372044316, 12120.007883707682, 557.0477956312674, -15403.791616777333, 5099.332114894694, 6770.897413968059, -3602.916766286823,),
    (1, 6): (-3.148757815361023, 3.5304254293441772, 198.68572865213667, -216.34668231010437, -2072.80986157001, 2218.270202732818, 8045.165714825524, -8511.552133076279, -14309.871109127998, 15016.531410813332, 11861.413256188316, -12371.581568282436, -3719.9772756862994, 3861.6906957124443,),
    (0, 7): (1.7277275025844574, 0.0, -108.09091978839466, 0.0, 1200.9029132163525, 0.0, -5305.646978613403, 0.0, 11655.393336864534, 0.0, -13586.550006434138, 0.0, 8061.722181737309, 0.0, -1919.457662318407,),
    (8, 0): (-0.013092041015625, 0.12801339285714286, 0.2764525204613095, -4.973877728174603, 17.501935105096727, -29.549479166666668, 26.907133829250256, -12.754267939814815, 2.477179842557763,),
    (7, 1): (-0.02618408203125, 0.653960697234623, -0.8638636997767857, -30.956497628348213, 194.5489077828759, -527.7434874304178, 780.7970272111304, -656.2967227888696, 295.2217849291892, -55.33492825703911,),
    (6, 2): (0.20619964599609375, -2.520263671875, -8.997949523925781, 159.65856119791667, -527.0220052761501, 337.2190755208333, 1618.7873626708983, -4211.0382245852625, 4434.1363497656885, -2259.276816285687, 458.84770992088926,),
    (5, 3): (-0.8591651916503906, 6.969002314976284, 55.378133392333986, -495.0305846610902, 733.5599177042643, 2262.8678469622578, -7898.558874040768, 5695.140700031799, 7718.792330973433, -16089.784052072184, 10424.89664595804, -2413.3719004256172,),
    (4, 4): (2.6311933994293213, -14.813423156738281, -194.76567316055298, 1116.295762125651, 214.74175742997065, -9500.200790405273, 12733.852428636434, 15619.117721871584, -43856.44219541648, 16041.189890575017, 30538.376827393702, -31457.433732481488, 8757.450232923149,),
    (3, 5): (-6.0893332958221436, 23.21895432472229, 480.30594648633684, -1808.5316684886388, -3878.5356589824432, 19896.567837257637, -442.43697992960614, -68889.99079285296, 51994.29193359834, 82310.6869110698, -107791.27622674359, -11421.030640241632, 61775.6226297841, -22242.80290037086,),
    (2, 6): (10.233462899923325, -24.04505968093872, -830.5550415388176, 1907.382995060512, 9817.075505746376, -24000.956291863276, -37145.39865639345, 109134.42187067667, 44836.1310858795, -222597.99503087997, 21083.102663859052, 208148.6713344014, -75945.99320976129, -72698.98447341226, 38306.90885081725,),
    (1, 7): (-11.230228766798973, 12.382047101855278, 918.7728182013545, -990.8334313936177, -12609.480588771701, 13410.082530915935, 66320.58723266755, -69857.68521840981, -169003.20338453574, 176773.46560911209, 224178.07510616328, -233235.7751104527, -149141.86036214023, 154516.34181663176, 39348.88207752734, -40628.52051907295,),
    (0, 8): (6.074042001273483, 0.0, -493.915304773088, 0.0, 7109.514302489364, 0.0, -41192.65496889755, 0.0, 122200.46498301746, 0.0, -203400.17728041555, 0.0, 192547.00123253153, 0.0, -96980.59838863752, 0.0, 20204.29133096615,),
    (9, 0): (0.0109100341796875, -0.1324287403541554, -0.20350690569196428, 6.334938473979001, -28.6621148111118, 63.36748336442143, -79.92548561881108, 58.757341382271306, -23.521455678429625, 3.97431664548499,),
    (8, 1): (0.024547576904296875, -0.7229771205357143, 1.72462398710705, 39.54634114583333, -316.99617299397784, 1081.582459077381, -2074.4037171674995, 2398.8177766525205, -1664.7533222350237, 640.3728519643776, -105.19241070496638,),
    (7, 2): (-0.22092819213867188, 3.277611323765346, 9.300320979527065, -250.77115683984505, 1087.8174260457356, -1404.302891126091, -2563.9444452795965, 11622.495969086322, -17934.3441636147, 14479.313178892271, -6122.63974060247, 1074.0188194633058,),
    (6, 3): (1.0739564895629883, -10.898971557617188, -78.3541690826416, 948.6580297851563, -2219.4645106141834, -3394.087506103516, 22215.58137123579, -30531.682191548916, -6945.09541692773, 63170.2367433357, -72433.4733597442, 36368.490166893054, -7090.98414263977,),
    (5, 4): (-3.946790099143982, 28.973631262779236, 345.9624051570892, -2698.264002605166, 1749.166319439676, 24230.291604531834, -57186.68270652559, -12268.269917924905, 179642.68522044024, -184075.59647969634, -55836.464134952716, 219854.46366368397, -146898.326284019, 33116.007471226345,),
    (4, 5): (11.41749992966652, -60.54320812225342, -1092.4312783437115, 5864.8337360927035, 6502.6598836863795, -73117.67362073364, 62464.98649007569, 248344.19895160815, -446788.55343178427, -141685.28980603762, 805685.0085562568, -411181.5535115825, -353321.8498176741, 410732.5113566978, -112357.72180097661,),
    (3, 6): (-25.58365724980831, 94.00234790146351, 2561.446454216327, -9323.595824660999, -30925.007683879998, 137806.75057795568, 66832.11490804658, -695211.424089429, 297044.2430620879, 1456689.0310313085, -1349408.441203692, -1160751.910767026, 1778986.1326650807, 2732.4118798791033, -771855.4278055248, 274755.25810395356,),
    (2, 7): (42.11335787549615, -96.75274014472961, -4309.387526895319, 9728.18278095552, 67131.49391428917, -158519.18454455852, -361549.21741861664, 965627.7501076394, 791368.9026948006, -2797294.400847488, -473067.2997835205, 4157484.301968846, -742925.2187595865, -3063454.4290601774, 1186992.6183777028, 886789.4399911041, -463948.9124628783,),
    (1, 8): (-45.55531500955112, 49.604676343733445, 4692.195395344336, -5021.4722651930615, -81759.41447862769, 86499.09068028726, 556100.842080117, -583562.612059382, -1894107.2072367705, 1975574.1838921155, 3559503.102407272, -3695103.2205942157, -3754666.524034365, 3883031.1915227193, 2085082.8653557065, -2149736.597614798, -474800.8462777045, 488270.3738316819,),
    (0, 9): (24.380529699556064, 0.0, -2499.8304818112097, 0.0, 45218.76898136273, 0.0, -331645.1724845636, 0.0, 1268365.2733216248, 0.0, -2813563.226586534, 0.0, 3763271.297656404, 0.0, -2998015.9185381066, 0.0, 1311763.6146629772, 0.0, -242919.18790055133,),
    (10, 0): (-0.009273529052734375, 0.1356906467013889, 0.1166891125414467, -7.762507595486111, 43.78456262533557, -121.31910738398369, 198.2012198129542, -200.43673900016432, 123.80342757950794, -42.937783937667895, 6.423822498985321,),
    (9, 1): (-0.023183822631835938, 0.7894818277070017, -2.7769457196432445, -48.48351172505462, 486.2694474679452, -2023.8687997794445, 4819.5203340475455, -7173.845552154039, 6815.549754769387, -4029.148885996514, 1353.9765257894258, -197.95866455017787,),
    (8, 2): (0.23473620414733887, -4.121603393554688, -8.529084409986224, 371.57630452473956, -2030.4431650042156, 3928.249814860026, 2472.6031768756443, -26784.70619288315, 57707.467479758205, -65779.37528455863, 43428.75542900036, -15731.92148300192, 2430.2098720207428,),
    (7, 3): (-1.3040900230407715, 16.02356831232707, 103.7233241308303, -1667.315650667463, 5406.656197744804, 2872.9832533515446, -52104.15788249263, 110439.4425121051, -46659.13728281303, -173333.53977304077, 339551.8623595128, -281181.85781749483, 116143.52270798283, -19586.90142650334,),
    (6, 4): (5.591285973787308, -51.149418354034424, -562.3207324802876, 5740.379038238525, -8505.888519568523, -51098.161945523156, 189688.56368664134, -98986.67611350543, -524313.3332072016, 1006412.2572891519, -338656.53584266576, -879242.3031416284, 1184856.1356540793, -599009.5959319434, 113723.03789882673,),
    (5, 5): (-19.409749880433083, 133.60695303976536, 2184.1347855359318, -15685.927751365061, -3330.0494749048685, 213065.39140775686, -371035.73548135295, -595658.1035199931, 2217706.3121620207, -928359.7615083011, -3462387.4565158784, 4492508.583156209, -105953.60990151919, -3174045.4228780973, 2222890.114855813, -492012.66653936007,),
    (4, 6): (54.36527165584266, -276.5181863307953, -6505.307639166713, 33393.90900198902, 70377.36768431832, -559956.4224761113, 214189.08434628605, 2932546.143460969, -3873550.933495049, -5169809.562645506, 12515387.720161637, -485287.1010384119, -14696506.049911873, 8973612.611250544, 4358025.711357972, -5899263.963025857, 1593568.945883017,),
    (3, 7): (-119.32118064723909, 426.72709654457867, 14774.672950860113, -52455.44073722281, -242280.570685599, 994102.6739522996, 1032233.4449197464, -6741567.108560378, 646495.8321529665, 20680668.518424854, -13425393.794712165, -29950004.715897616, 32133326.488920312, 16877471.90592921, -30879035.210339583, 1961435.1350279427, 10741165.11222991, -3791244.349500207,),
    (2, 8): (193.61008879059227, -437.3310240916908, -24389.798720089893, 54330.68352503968, 481258.52318321, -1109084.2311883408, -3433050.7548587224, 8650457.543468487, 11004225.300068311, -33238526.47538075, -15303078.309507955, 69562860.62990211, 1830924.923944024, -80869740.51766324, 18943271.99449535, 49072182.78465058, -19806771.89902939, -12122574.79857969, 6307948.122622056,),
    (1, 9): (-207.23450244622654, 223.48818891259725, 26248.2200590177, -27914.77371355851, -565234.6122670341, 595380.4582546093, 4808855.001026172, -5029951.782682547, -20928027.009806808, 21773603.858687893, 52050919.69185088, -53926628.50957524, -77147061.60195628, 79655909.13372722, 67455358.1671074, -69454035.44613281, -32138208.55924294, 33012717.635684926, 6437358.47936461, -6599304.604631645,),
    (0, 10): (110.01714026924674, 0.0, -13886.08975371704, 0.0, 308186.4046126624, 0.0, -2785618.1280864547, 0.0, 13288767.166421818, 0.0, -37567176.66076335, 0.0, 66344512.27472903, 0.0, -74105148.21153265, 0.0, 50952602.49266464, 0.0, -19706819.118432228, 0.0, 3284469.853072038,),
    (11, 0): (0.008008956909179688, -0.13811212730852318, -0.018036238655211433, 9.227585344579714, -63.43318905865704, 213.60596888977804, -432.9618339664161, 563.5828281072922, -476.6485895149011, 254.12602383553943, -77.79724833536868, 10.446593930548513,),
    (10, 1): (0.02202463150024414, -0.8537870619032119, 4.022369764937835, 57.40872852466725, -711.1778817448752, 3529.7027186963924, -10126.360073656459, 18593.57183384303, -22636.974191769863, 18256.758136740547, -9401.739096348214, 2805.130952132437, -369.5117338213376,),
    (9, 2): (-0.24777710437774658, 5.0497246547178785, 6.375349464870634, -525.7776319562821, 3515.3901490500366, -9098.946585413438, 1501.449934117588, 52968.40256942741, -156962.17039552, 237710.55444046526, -217889.7609136776, 122183.02599420559, -38765.36676500369, 5352.021907283489,),
    (8, 3): (1.5486069023609161, -22.48286247253418, -129.63729095714433, 2741.638566981724, -11510.430102675971, 3157.633145077418, 105738.58606273177, -320687.7822228627, 312110.0413375543, 306706.99777237116, -1199602.262675182, 1489876.75818079, -983301.0381246094, 346445.2252546859, -51524.795648340965,),
    (7, 4): (-7.588173821568489, 83.79132223625977, 852.651491996646, -11106.11406304718, 25906.550896742894, 90628.03856082648, -518627.0052655401, 625235.1381343907, 1093177.6471805288, -3890056.269906493, 3443257.530483528, 1688397.8063561004, -6072278.753811017, 5368522.305391169, -2206353.997770455, 362368.2691728461,),
    (6, 5): (30.73210397735238, -262.68730902671814, -3966.703098702431, 36616.605837684016, -23288.02092194995, -522073.1921054033, 1445873.6105443314, 729826.9199335962, -8027322.740477521, 9022069.972241307, 8528377.766971355, -26111911.326974582, 15072848.600502055, 11547035.062352154, -20141460.694713123, 10381853.494410237, -1934247.3992962518,),
    (5, 6): (-103.29401614610106, 679.4957387158647, 14406.592158034444, -97833.4854134274, -109874.73447139263, 1806898.478133067, -2228617.568864937, -9039218.069870703, 22913970.35755808, 6014580.774756414, -67365551.08273101, 49347945.00810039, 61291772.21895597, -101851641.61990358, 18812228.43843536, 48878028.30651433, -36319210.680616364, 7931540.865537214,),
    (4, 7): (283.38780403719284, -1397.731549590826, -41380.460209263256, 205570.88069305534, 656958.6927814606, -4406726.3053560415, -460386.1538930014, 31745963.553354092, -30185144.89950106, -92885893.76184295, 159671874.67639935, 89037317.39194715, -324112057.6206451, 75417289.28844711, 275169534.60077554, -191141129.57979682, -56632059.76142215, 92789782.49257566, -24828398.690560814,),
    (3, 8): (-613.0986145035422, 2147.8571771753195, 91956.39909866106, -320284.80771632295, -1938565.2131506524, 7533108.6348156, 12364512.209251264, -65358277.938386194, -16530840.331176117, 269292234.00676316, -105780946.98529899, -575008738.519056, 462747211.13824445, 619754381.8789831, -755460241.9400861, -252322946.06096464, 569416784.9196941, -61357261.82086586, -164974352.55837953, 57850732.22966805,),
    (2, 9): (984.3638866195761, -2194.2476729600457, -149715.34984220302, 329977.62359907967, 3636074.9553359346, -8229815.954608016, -32850375.70539885, 79594841.39629526, 140766384.09976012, -388119773.6364172, -302391232.5888283, 1069154026.102883, 267438889.51147762, -1738631339.5172586, 117013574.77418801, 1654904787.033035, -452792004.0990536, -852646349.5309352, 354479824.94387954, 183646906.0528168, -95153470.22721179,),
    (1, 10): (-1045.162832557844, 1118.5075927373418, 159690.03216774596, -168947.42533689065, -4160516.4622709425, 4365974.065346051, 43177080.98534005, -45034159.737397686, -232553425.41238183, 241412603.5233297, 732559944.8848853, -757604729.3253943, -1426407013.9066741, 1470636688.7564933, 1741470982.9710174, -1790874415.1120393, -1299291363.5629485, 1333259765.2247248, 541937525.7568862, -555075405.1691744, -96891860.66562511, 99081507.2343398,),
    (0, 11): (551.3358961220206, 0.0, -84005.43360302408, 0.0, 2243768.1779224495, 0.0, -24474062.72573873, 0.0, 142062907.7975331, 0.0, -495889784.2750303, 0.0, 1106842816.8230145, 0.0, -1621080552.1083372, 0.0, 1553596899.57058, 0.0, -939462359.6815784, 0.0, 325573074.18576574, 0.0, -49329253.66450996,),
    (12, 0): (-0.0070078372955322266, 0.13990718736965074, -0.09080249353478408, -10.70304671940292, 88.13905570591616, -352.5536541489697, 860.2674766949058, -1381.388490707554, 1497.526238137558, -1089.5695395426785, 511.32054028583485, -140.15612725058884, 17.07545069514774,),
    (11, 1): (-0.02102351188659668, 0.916142290844506, -5.461889736566365, -65.92709073089979, 1000.5846459432155, -5819.510495824431, 19669.512303383908, -43248.109984766954, 64686.83321992556, -66644.72159278701, 46700.22487657625, -21305.241783200054, 5716.056438886386, -685.1337664336446,),
    (10, 2): (0.2601659595966339, -6.059730052947998, -2.523333628283066, 716.616098673987, -5739.353151810857, 18710.056678357367, -15227.052778022873, -90410.69342927846, 374173.78606362105, -726678.8590896743, 867690.6361348755, -669330.9729636007, 326923.4316409403, -92347.97513678823, 11528.702830431737,),
    (9, 3): (-1.8067080527544022, 30.41315558507587, 153.62532423010893, -4275.681855774877, 22280.234407631844, -22294.3603921321, -188892.0765865273, 800265.5772968673, -1211192.8548070344, -77428.4081847135, 3343683.837970314, -6075462.155411939, 5742939.802563024, -3178262.5289756646, 978732.9806555888, -130276.59845140693,),
    (8, 4): (9.959478140808642, -129.64064240455627, -1221.6473410353065, 19961.318612462794, -64135.37720635896, -132491.34865988838, 1231383.3446542423, -2354589.943537212, -1264272.3547066583, 11829877.236705665, -17640228.8499216, 3679036.5985685345, 21328290.4639577, -31765842.068457924, 21552604.86205348, -7505720.501322565, 1087467.9477654193,),
    (7, 5): (-46.09815596602857, 474.2817955557257, 6683.698617373726, -77185.9281083402, 113831.12007369411, 1111273.3131467255, -4487654.882212431, 1363280.0193113291, 22934079.022569533, -45086888.89143024, -1310272.8912292086, 103829405.25391139, -124354846.65650934, 7129538.37621234, 107358912.4192952, -104902766.60439073, 43358616.23878111, -6986431.791678039,),
    (6, 6): (180.76452825567685, -1472.151622697711, -28789.438034501905, 248412.4928151497, 57720.37443908062, -4919773.7285477435, 10556839.574755387, 20546468.524262875, -95782021.41390106, 47859753.79401953, 248947938.76422518, -397302112.7750545, -60373613.59319694, 619895830.6794678, -460542977.5769154, -133881283.6228837, 360816116.57296145, -191228273.50596204, 35131056.26464393,),
    (5, 7): (-595.114388478105, 3784.576488941093, 100370.50080364884, -654419.0938431186, -1371381.6192330609, 15498343.812751787, -11665144.592299357, -112601561.49426608, 219262318.25667363, 254104121.37964988, -1006396481.7103226, 253036623.9872969, 1831393810.497864, -1774529065.426649, -1003472637.9292915, 2290280875.9786744, -651246794.1088722, -803784902.9810971, 640483342.2936913, -138440607.21363136,),
    (4, 8): (1609.3838630717983, -7751.996104125283, -281313.5742689692, 1362914.7891508336, 5966457.108111073, -36097318.95606442, -22309783.293551423, 336158425.1422515, -205028522.0350672, -1388339192.4100137, 1836112835.6997824, 2556726458.136804, -5652778880.458099, -1072688790.0156425, 8223828086.676475, -2962125430.617538, -5363095697.458652, 4151384158.228336, 758617226.2906682, -1589602926.9007583, 422197436.2603177,),
    (3, 9): (-3445.2736031685163, 11875.044917870855, 615370.5061750343, -2111012.288074303, -16085470.193130488, 60142798.465327084, 138071565.42237887, -645362876.5721123, -403042168.77936625, 3392353592.8461413, -459521271.5412636, -9731832243.412884, 5664098916.139917, 15628587453.068138, -14586127233.110453, -13112286301.064476, 18076138583.501, 3815036344.9012046, -11188129037.135693, 1563031125.3210442, 2774182673.1720276, -967769239.0172032,),
    (2, 10): (5487.104870928681, -12101.885429617141, -991438.7523947014, 2166230.0015798584, 28994419.876786742, -64719144.9686591, -321629835.31147623, 757688130.8395157, 1749409837.5100644, -4544758370.916262, -5113992851.954476, 15778214197.520607, 7774473545.944487, -33570323211.012886, -3804246527.475932, 44463088926.91959, -5920634247.333193, -35768726949.85058, 10834752690.813606, 16001937124.166967, -6803368741.907092, -3054556963.356995, 1577229794.0273015,),
    (1, 11): (-5789.026909281216, 6156.584173362563, 1050067.9200378011, -1106071.5424398172, -32534638.579875518, 34030484.031823814, 403822034.974689, -420138076.7918482, -2628163794.254362, 2722872399.452718, 10165740577.63812, -10496333767.154808, -24903963378.517826, 25641858589.73317, 39716473526.65426, -40797193894.72649, -41170317838.62037, 42206049105.000755, 26774677250.924984, -27400985490.712704, -9929978762.665855, 10147027478.7897, 1603200744.0965738, -1636086913.206247,),
    (0, 12): (3038.090510922384, 0.0, -549842.3275722887, 0.0, 17395107.553978164, 0.0, -225105661.88941526, 0.0, 1559279864.8792574, 0.0, -6563293792.619285, 0.0, 17954213731.1556, 0.0, -33026599749.800724, 0.0, 41280185579.753975, 0.0, -34632043388.158775, 0.0, 18688207509.295826, 0.0, -5866481492.051847, 0.0, 814789096.1183121,),
    (13, 0): (0.006199240684509277, -0.14122658948520403, 0.20847570003254473, 12.163573370672875, -118.39689039212288, 552.6748799175799, -1587.5976792806462, 3052.8623335041016, -4067.0706975337407, 3781.4312193762994, -2415.530696666978, 1012.7298787459738, -251.37116645382358, 28.031797071713953,),
    (12, 1): (0.02014753222465515, -0.9767510426508916, 7.096097773252087, 73.61240444693182, -1363.2529599857205, 9163.574960565107, -35864.83202751768, 92376.94794688314, -164834.83784046138, 208040.7421486424, -185789.855430546, 115101.05980498683, -47134.49774740617, 11488.455724263406, -1263.256478134231,),
    (11, 2): (-0.27199168503284454, 7.149596092688454, -3.3482232633271773, -946.7788687505007, 8937.522375551387, -35337.290730230234, 49459.110954680524, 130172.10642681314, -799759.4362203731, 1951258.3781149474, -2917568.5809228728, 2902364.7717490215, -1939009.9106363829, 839993.2900731042, -213947.07574365748, 24380.364047003815,),
    (10, 3): (2.0777142606675625, -39.94736075401306, -172.57638879468382, 6386.186955562886, -40128.23395013386, 67957.94781470392, 297268.90885718167, -1779345.5277624794, 3703482.95152391, -1986101.2546910897, -7335848.9571808, 20236466.14831126, -26009069.048248406, 20168378.697199374, -9655403.793821568, 2644939.50994817, -318773.08892039495,),
    (9, 4): (-12.72599984658882, 191.72191139924425, 1668.3300609576206, -33822.37603736715, 139670.53397437636, 142413.44221576978, -2615894.948837068, 7028008.741102099, -1692308.6869349768, -29470781.81274997, 66963160.30704782, -48089009.18054011, -47220345.65200829, 138176622.72569343, -141477318.49446413, 78991076.06628808, -23950277.790642798, 3106959.7999206283,),
    (8, 5): (66.26609920116607, -801.8515903651714, -10599.673972529736, 150238.26124378282, -349014.85897753894, -2089251.7495501186, 11932847.810754979, -12233248.98935502, -52996346.81033538, 167552806.49381, -104151238.67453538, -295472139.386798, 638921130.0502791, -364575119.5506925, -321938848.5018657, 670099675.8740562, -477068925.0747783, 165792634.22539303, -23563863.859185524,),
    (7, 6): (-296.97029642004054, 2903.8678610353963, 53085.57401754476, -566162.2156422413, 351303.0507931015, 11717363.296337798, -37248885.40173167, -29556393.543845627, 317963019.1551406, -391675101.1870579, -632571201.8906721, 2001265322.6458411, -1008064787.2696644, -2363398838.2753954, 3743079200.591201, -1091651847.4629543, -1902208028.035804, 2133928476.440911, -893289789.9811288, 141870657.61209,),
    (6, 7): (1140.6359112497012, -8957.26825843798, -218407.3362912553, 1794837.693023293, 2046161.0563529024, -45986041.82807991, 74544641.81448273, 314850611.4572535, -1044136171.4521382, -187106978.3335574, 4438953626.095682, -4408582954.0483055, -6264272163.439719, 14149702487.577581, -2713149740.6519136, -14233558941.890554, 12753481214.719288, 934842459.4043341, -6845048171.934112, 3754053882.012795, -682202534.2837728,),
    (5, 8): (-3701.582885065136, 22929.42381649823, 740942.4546262622, -4683368.479496754, -14688082.295896811, 136985890.98054215, -37063877.251336545, -1319571104.7402947, 2005453574.1427636, 4917316117.132459, -13428166320.891447, -3828355991.3598266, 37778220592.815994, -20635506272.06695, -47082248514.737816, 56649997707.122925, 14169411429.388481, -52510965464.20784, 18673363121.781647, 14082226269.939926, -12159500780.523354, 2607014902.95397,),
    (4, 9): (9905.161609109484, -46820.775577189124, -2040487.1579820313, 9691735.57258924, 54815060.69207336, -309390686.57090217, -360017948.0802763, 3579817310.0615044, -975311608.4990194, -19324823653.63573, 19615966368.54824, 52313543472.729546, -87319509031.59497, -62880701946.0012, 187577712375.82047, -5014883987.803881, -210187382319.75342, 95721572764.80733, 109424352395.85297, -93578868051.24042, -10054064393.16693, 29497575770.435658, -7788016225.40167,),
    (3, 10): (-21033.90200522661, 71551.02238835797, 4410889.421489859, -14945521.65322753, -139310283.22771755, 506112018.78208166, 1519598088.8133636, -6552067582.056451, -6692370095.428206, 42444451633.41426, 5560288488.776679, -155035909620.11652, 57543525805.054085, 335136386281.40045, -242028870673.91837, -425158049601.57074, 447281929473.23047, 285539009675.267, -446532174700.7554, -56114815650.416794, 234199738711.3991, -38367666879.80787, -50717346515.57769, 17618025541.84948,),
    (2, 11): (33286.90472836699, -72776.33828810672, -7048423.082037407, 15288988.915750384, 243935418.08573976, -538504362.7013879, -3246894911.639683, 7489063194.076051, 21666937100.705364, -53983904963.06258, -80910564664.87747, 229101080335.064, 172760876423.44067, -610977234886.304, -187937135374.72034, 1053702358870.4191, 18639458829.443775, -1174519256075.3586, 213630362751.48245, 817332252922.9733, -266086886489.81592, -322968489592.2796, 139744842706.19028, 55347422611.58018, -28497920919.101276,),
    (1, 12): (-34938.04087560742, 36963.43454955568, 7422871.422225897, -7789432.973940756, -269624167.0866616, 281220905.4559803, 3939349083.0647674, -4089419524.3243775, -30405957365.145523, 31445477275.065025, 141110816541.3146, -145486345736.39413, -421924022682.1566, 433893498502.927, 842178293619.9185, -864196026786.4523, -1135205103443.2344, 1162725227163.0703, 1021645279950.684, -1044733308876.1232, -588678536542.8185, 601137341549.0157, 196527129983.73688, -200438117645.10477, -28925012912.20008, 29468205642.94562,),
    (0, 13): (18257.755474293175, 0.0, -3871833.442572613, 0.0, 143157876.71888897, 0.0, -2167164983.223795, 0.0, 17634730606.83497, 0.0, -87867072178.02327, 0.0, 287900649906.1506, 0.0, -645364869245.3765, 0.0, 1008158106865.3821, 0.0, -1098375156081.2233, 0.0, 819218669548.5773, 0.0, -399096175224.4665, 0.0, 114498237732.0258, 0.0, -14679261247.695616,),
    (14, 0): (-0.005535036325454712, 0.14217921713372686, -0.33386405994128193, -13.585546133738642, 154.6628244201525, -830.7106993008341, 2761.029118256234, -6219.835115705068, 9888.192779923864, -11266.694472611705, 9175.501758192004, -5225.742970325184, 1980.4053574007653, -449.2157029031175, 46.18988866137692,),
    (13, 1): (-0.01937262713909149, 1.0357822247248984, -8.925286740954556, -80.01076084820852, 1807.7010112763721, -13886.23977992694, 62074.02578469107, -184145.36258906484, 383582.0397373852, -576038.1480224165, 628833.5717748705, -495573.34466362547, 275136.2655603748, -102207.94135045742, 22823.518594320783, -2318.166419436824,),
    (12, 2): (0.28332467190921307, -8.317484202323023, 11.564968830087189, 1218.3176746274855, -13385.506466376133, 62540.30144463991, -122382.9136567534, -143089.29056273054, 1554707.5273250397, -4718379.120243579, 8605382.388217239, -10599895.885891961, 9077838.649203368, -5358306.803673643, 2087192.8797093735, -484205.518878133, 50761.44498958965,),
    (11, 3): (-2.3610389325767756, 51.215318048867836, 182.7246220662577, -9201.602610035008, 68268.2562703701, -162141.74207057405, -402709.29424480087, 3603004.6646962552, -9740822.743691595, 10107345.07482204, 11498843.003383758, -56841651.345428295, 97219891.2514146, -99519441.57239148, 65942266.170395136, -27893470.5277172, 6888375.143118141, -758786.3148474953,),
    (10, 4): (15.907499808236025, -273.33609867841005, -2184.4474298407245, 54603.014533953545, -277734.45331034885, -41109.66279696009, 5064705.805434759, -18090940.629099194, 15917528.891696546, 60220437.63786092, -208561974.26419502, 250941409.40257928, 12084648.536915455, -458976381.3174162, 699975914.260747, -563757375.3416687, 269426949.8534435, -72497863.1843613, 8519623.32566494,),
    (9, 5): (-92.03624889050843, 1286.5459820115675, 15984.246642014752, -274251.9413455901, 875242.4878923426, 3479369.5294348937, -28243123.38238942, 48978753.83393359, 96403146.2551309, -511553591.82361287, 629980523.2038463, 530948403.4101925, -2455930387.019278, 2650615136.5125113, -13787083.107153494, -2934135354.504286, 3427343175.1586685, -1959752975.9949665, 590135160.4033043, -75099321.778258,),
    (8, 6): (464.01608815631334, -5325.306848096196, -91725.50598115315, 1185316.6466349284, -1734253.4162956623, -24965643.65768772, 109865301.0696437, -7842536.599009056, -882004248.1653304, 1812569161.1229405, 796190115.1748242, -7547640676.289125, 8606208381.316284, 4634326771.384026, -19504767652.15116, 15458811432.485826, 3233232293.8508887, -14292761227.388542, 10872211035.524946, -3794154076.5815444, 531367092.46942383,),
    (7, 7): (-2036.8498415173235, 19163.284363303756, 436370.36938456364, -4395730.580473922, -1112960.9840974107, 119491789.40923461, -304912988.8434488, -691963837.0133654, 3885386169.73608, -2313847981.3260245, -14816925759.772211, 28337891715.90571, 7872387353.192413, -72435569735.09131, 59410896148.18937, 46141874867.83198, -105411711029.14682, 45764643115.28315, 33619493138.706043, -45524891856.627266, 19398990085.810093, -3046176001.4829698,),
    (6, 8): (7711.631010552366, -58858.32115449648, -1741907.2159207466, 13794087.929804008, 28916480.06546469, -437983696.2459598, 494945307.5536342, 4180226129.2961516, -10954467146.581303, -11060935369.012123, 67274495072.65439, -33385597946.54753, -168738543918.6943, 236353638119.121, 123426482948.35286, -460569493399.1512, 183685386812.6055, 323426896220.204, -345059927788.03296, 18066712637.598244, 137638821647.93765, -78528723144.41908, 14147149999.27183,),
    (5, 9): (-24762.90402277371, 150202.12250011534, 5795836.385474999, -35748503.91572715, -151894819.53780368, 1257834576.5897312, 283767191.8835147, -15254386392.322462, 17551211231.56745, 79224659176.16066, -169127446206.1995, -159965663833.0501, 667618088176.4683, -96638419442.06247, -1307530021252.0142, 998989571129.4067, 1171444346499.523, -1737201461305.162, -114746520425.41058, 1243665816084.6792, -512525557301.9352, -261796114655.33667, 247688439610.96542, -52756420815.90127,),
    (4, 10): (65730.94376633316, -305976.0032788201, -15752484.913133094, 73626048.7662199, 517727813.38636845, -2779778621.031182, -4848484539.300694, 38867748248.4867, 2816113040.383313, -261989764937.19714, 193832179511.35043, 941830771354.5242, -1252062600825.4805, -1788586580037.923, 3715406759129.64, 1338049108553.0784, -6078517409833.267, 1046877894952.0463, 5489626110236.166, -2928719118680.386, -2340856193318.642, 2206204676067.3125, 119173943641.45927, -589883942966.2108, 154983207892.81174,),
    (3, 11): (-138695.4363681958, 466698.9443685889, 33739004.101605795, -113151831.10727234, -1262494179.8855195, 4485679097.12217, 16876412838.414698, -68734331237.68523, -99319007190.86728, 535143925100.6457, 219559829042.68088, -2402169771537.23, 385225420494.61273, 6605716163805.363, -3536807746028.463, -11320974870399.201, 9487604757721.176, 11727696199159.895, -13727281916428.068, -6409955842808.298, 11468445778721.254, 723160235150.798, -5214971540434.54, 952560905703.6266, 1001898723474.6755, -346817425242.5275,),
    (2, 12): (218362.75547254636, -473942.1197038919, -53559985.272697166, 115466888.79018062, 2162702487.2919507, -4731469254.682061, -33930459549.83583, 76986136366.18002, 271095146839.7532, -654897543249.2882, -1244130265844.503, 3321026659065.358, 3434492363731.465, -10772528238693.36, -5553407245149.382, 23184673024360.11, 4148109873524.0835, -33519510690760.227, 1766187462911.1875, 32207800350987.664, -7064569616534.612, -19734747129816.39, 6780185269401.904, 6981112975541.698, -3063627371132.2563, -1085299076029.5918, 557485489473.2834,),
    (1, 13): (-228221.94342866467, 240393.7804115268, 56141584.917302884, -58722807.21235129, -2362104965.861668, 2457543550.3409276, 40092552189.64021, -41537328845.12274, -361511977440.1169, 373268464511.3402, 1977009124005.5234, -2035587172124.2056, -7053565922700.689, 7245499689304.79, 17102169035002.477, -17532412281166.062, -28732506045663.39, 29404611450240.312, 33500442260477.312, -34232692364531.46, -26624606760328.76, 27170752540027.816, 13768818045244.094, -14034882162060.404, -4179185677218.942, 4255517835706.9595, 565151558036.2812, -574937732201.4116,),
    (0, 14): (118838.42625678325, 0.0, -29188388.122220814, 0.0, 1247009293.5127103, 0.0, -21822927757.529224, 0.0, 205914503232.41, 0.0, -1196552880196.1816, 0.0, 4612725780849.132, 0.0, -12320491305598.287, 0.0, 23348364044581.84, 0.0, -31667088584785.16, 0.0, 30565125519935.32, 0.0, -20516899410934.438, 0.0, 9109341185239.898, 0.0, -2406297900028.504, 0.0, 286464035717.679,),
    (15, 0): (0.004981532692909241, -0.14284537645361756, 0.4660314433955633, 14.94692239017483, -197.35300817536964, 1205.6532423474202, -4572.947346725032, 11865.183572985043, -22026.784993357214, 29873.20668972799, -29749.925047590506, 21561.07641433711, -11081.438701085532, 3832.1051284527, -800.4079199584038, 76.35687905290095,),
    (14, 1): (0.018680747598409653, -1.0933780262877535, 10.949523517716477, 84.643531757175, -2342.0651134541363, 20369.770814493524, -102837.36670370684, 346648.70123159565, -828961.7526173387, 1449716.2069081753, -1879301.2063630472, 1807331.1927210535, -1274496.047955376, 641015.8873563296, -217895.3569816474, 44894.191761385744, -4236.673416458739,),
    (13, 2): (-0.29422177467495203, 9.561712386364025, -22.456083202924763, -1532.575201032898, 19400.899387993297, -105087.87893355958, 262967.9235373233, 61613.709412718184, -2770349.5737553267, 10454840.708341906, -22841191.197018135, 33883152.51340366, -35702419.89131143, 26908321.88726064, -14241918.449935481, 5042187.177232684, -1074259.7908211057, 104287.72699173732,),
    (12, 3): (2.6561687991488725, -64.3440605080747, -179.63738093291838, 12860.884276726403, -110864.10416322605, 338921.6696086328, 430704.4637247086, -6738355.617335457, 22959038.837731227, -34599901.8185986, -5491093.148263638, 136348100.13563344, -311391327.48073316, 406747852.8749038, -350465400.6563456, 203621539.6441128, -77285292.82552329, 17387623.032021545, -1764164.565777261,),
    (11, 4): (-19.522840673744213, 378.054427030434, 2752.8286152184837, -84659.00931676825, 515277.57789757004, -327436.1285876312, -9039645.402186435, 41795541.14558163, -61523469.344794095, -95072522.33600353, 557312492.7699198, -963898631.1721574, 480963077.0527874, 1131925258.235356, -2762861092.1224475, 3066633312.6192083, -2065683582.7903266, 866733914.7176133, -209952808.47963646, 22561861.30689057,),
    (10, 5): (124.24893600218638, -1977.9098049255554, -23091.371137548784, 474842.97883978905, -1940160.8026042802, -5051698.176475392, 60910728.96112105, -150451158.23316205, -115862597.99920025, 1340568362.9608934, -2534626023.8559566, 57223508.996001184, 7462542511.136889, -12803010436.906857, 6529418551.99172, 8333347633.630946, -17879701023.37078, 15384544080.383156, -7429525037.630992, 1979364564.1715841, -228201703.20311713,),
    (9, 6): (-696.02413223447, 9211.732948445078, 150176.80785295594, -2316795.90169698, 5353301.726709913, 48240128.32064539, -285088568.66606945, 236539658.57255855, 2091063546.042414, -6478408107.947922, 2114947617.4171696, 22484222108.370438, -43504182331.31258, 9073306866.743038, 72378013713.66345, -104755002543.75143, 35288894490.70863, 58426452630.06238, -83650899080.6256, 49569134901.99425, -14909719423.420584, 1869289195.4875345,),
    (8, 7): (3437.1841075604834, -37884.31644833955, -813572.8279096411, 9844700.119674265, -5932665.573759617, -278602941.80981755, 999702331.7559991, 1082145758.5676866, -12097872233.934345, 16269568192.896168, 37442906272.62988, -127678482632.39935, 56533169829.379616, 263705962704.22363, -430880513772.40015, 28685028305.645454, 544657720548.1643, -543385080747.8524, 33319140131.86386, 311025095335.0186, -257492440682.7887, 90635479554.8441, -12545989968.390205,),
    (7, 8): (-14872.431234636708, 135739.2359106718, 3743563.406669338, -36117123.586437546, -41857416.06405428, 1225475415.8400152, -2467842162.907412, -10944143126.18331, 45219896350.68711, 3706147531.3941536, -259638349679.498, 331511238218.36096, 503674442974.8522, -1481164218255.801, 369277357070.34485, 2339646237464.701, -2569885298111.3267, -667794049596.5874, 2906153064933.9253, -1575977334606.5288, -578377418663.531, 1021516684285.5146, -444821917816.5211, 69214137882.70387,),
    (6, 9): (55716.53405124085, -415613.72155461746, -14629090.28952118, 112517365.15692088, 349569807.61470723, -4300749690.400817, 2780201489.2284703, 53008111096.39162, -112833892526.88953, -236800084652.33408, 948058960807.1896, 15893204800.58018, -3467524908336.784, 3164309467171.3657, 5582435675279.182, -10541249137249.73, -1168774181536.203, 14413943369875.125, -7960463497916.106, -7323822211977.289, 9405979314966.688, -1275663773372.9197, -2930439830152.3545, 1747630840980.1348, -312613977240.16974,),
    (5, 10): (-177473.54816909952, 1058104.4704696212, 47977824.89795256, -290115715.66147846, -1577194622.2444813, 12040320836.77494, 8938496432.776169, -177729149538.5476, 142764258530.36398, 1190892990608.0, -2059313111949.912, -3727699663610.191, 10889256225145.523, 3246312869985.9517, -29702334678008.055, 12354361209407.777, 43335047349400.914, -41504037524268.0, -28336804589555.31, 52945932725332.516, -2984104941157.1313, -30618403352283.41, 14099792752244.01, 5138575314225.492, -5394419195595.038, 1142750145697.5796,),
    (4, 11): (468097.09774266084, -2151404.5559841446, -129076990.59865052, 595316208.5142877, 5064273602.590667, -26185510869.073116, -61837037264.90558, 433386998010.2327, 186443883288.3731, -3537220973754.002, 1681730347233.85, 15988837394678.875, -16993822946683.547, -41340811227869.29, 67591520066179.68, 56621717984129.586, -149792388677379.47, -20183328379251.848, 196651762467137.75, -54964390301576.37, -147653284026647.88, 88925712863728.44, 52472318964377.74, -54571161032830.89, -776744894101.8108, 12653076888080.967, -3310861678129.4434,),
    (3, 12): (-982632.3996264586, 3276416.052793783, 274430595.867674, -912438377.6104804, -11979589299.502913, 41816043571.57036, 191330729548.58234, -746943185635.967, -1416198224023.6465, 6856956393274.589, 4829515891796.997, -36877687475484.6, -2050957082915.0942, 124378250253033.78, -44312193894090.53, -271207689501172.62, 179586202876957.78, 381618869449173.25, -359490061117883.0, -330393612742248.44, 427952236370799.94, 148052565489017.03, -307266140839707.2, -4687264091266.087, 123260326898726.61, -24376238900981.87, -21272360948501.37, 7341892911307.882,),
    (2, 13): (1540498.1181434866, -3322911.496321358, -433313348.25129664, 929240026.217427, 20173953055.394386, -43806310275.98003, -367752562201.2417, 823522693625.0421, 3453452850623.271, -8147245540357.756, -18967395863304.5, 48502623842268.84, 64652876623215.016, -187135422438997.88, -137928375585894.45, 487895841149504.6, 171009666849543.97, -877097552972882.4, -74254863627598.11, 1089588154832573.5, -116085557257555.86, -919163347233503.8, 228872931917376.7, 502861180782827.8, -180138187046492.0, -160984522251228.28, 71472589051967.58, 22899647546405.16, -11739127546959.248,),
    (1, 14): (-1604318.754466574, 1683544.3719710961, 452420015.8944226, -471878941.30923647, -21822662636.47243, 22654002165.480904, 425547091271.8199, -440095709776.83936, -4427161819496.815, 4564438154985.089, 28118992684610.266, -28916694604741.055, -117624507411652.86, 120699657932218.95, 338813510903952.9, -347027171774351.75, -688776739315164.2, 704342315344885.5, 997513290420732.5, -1018624682810589.2, -1023931704917833.2, 1044308455264456.8, 728349929088172.5, -742027862028795.5, -341600294446496.2, 347673188569989.5, 95048767051125.9, -96652965651144.9, -11888257482283.68, 12079233506095.467,),
    (0, 15): (832859.3040162893, 0.0, -234557963.52225152, 0.0, 11465754899.448236, 0.0, -229619372968.24646, 0.0, 2485000928034.0854, 0.0, -16634824724892.48, 0.0, 74373122908679.14, 0.0, -232604831188939.94, 0.0, 523054882578444.6, 0.0, -857461032982895.0, 0.0, 1026955196082762.5, 0.0, -889496939881026.5, 0.0, 542739664987659.75, 0.0, -221349638702525.2, 0.0, 54177510755106.05, 0.0, -6019723417234.006,),
    (16, 0): (-0.004514514002948999, 0.1432853705134875, -0.6041880495336683, -16.227111168548124, 246.84286168977113, -1698.752899088895, 7270.238718007833, -21434.839860240816, 45694.86603568991, -72195.53010755668, 85409.02284280748, -75563.23444486906, 49344.50122776959, -23110.149147008742, 7349.790938468142, -1422.6485707704092, 126.58493346342459,),
    (15, 1): (-0.018058056011795998, 1.149659605823462, -13.16870257489409, -87.00990462122273, 2973.9704746271364, -29057.863221639334, 164134.7779750923, -621775.7100815779, 1684395.4811437516, -3374103.7733925395, 5084254.010108815, -5797111.742665044, 4981685.58932215, -3178510.065144025, 1461172.7927229458, -457795.0665375895, 87552.17816265863, -7715.531861979758,),
    (14, 2): (0.30472969519905746, -10.880732823367957, 36.35359856684998, 1890.1183163422475, -27344.50396662656, 169206.00701162635, -515265.5792942078, 248217.1837675576, 4532205.969091296, -21492951.40502682, 55557247.108151935, -97285892.16088973, 122607925.7674121, -113234217.41453911, 76312885.3308721, -36634431.269047916, 11891540.51964304, -2342835.9225964453, 211794.47349942484,),
    (13, 3): (-2.962649814435281, 79.45804137006725, 158.20533868869907, -17512.09240449678, 173186.23779115768, -648825.9023813056, -226118.57798798103, 11744385.639221318, -49655262.44094926, 97992370.80614321, -45563229.25283381, -276725901.5587914, 874903955.44068, -1431639430.0141678, 1544324559.7308984, -1156507831.0309398, 599846625.3339608, -206711172.70469868, 42729154.354849584, -4019188.669120067,),
    (12, 4): (23.590099147440924, -509.7127086587716, -3345.7051051560484, 126830.08496875773, -904536.1779632089, 1241459.92395682, 14964746.535519589, -88697323.8770979, 182496348.04247934, 82548357.3736754, -1305701152.6740456, 3075905875.9322224, -2915784132.1314454, -1631935529.3260648, 8923557290.446716, -13522339111.332256, 12138202400.912394, -7081644626.242289, 2655510812.919567, -585530475.8366086, 57986597.25398542,),
    (11, 5): (-163.7826883665184, 2934.5753597465246, 32133.674298098813, -786448.5017351512, 3940574.6676366506, 6023482.021549257, -121576300.80985078, 396478314.8838899, -28867608.104982562, -3079357130.222696, 8249384124.842691, -5275292901.049003, -17864885603.458946, 48480263067.87549, -46292296797.993835, -6808810264.307432, 70205428541.43004, -89866265315.79846, 62728346454.98143, -26379975109.49727, 6313975478.50704, -665761463.932516,),
    (10, 6): (1009.2349917399815, -15188.489623096204, -234912.7446802936, 4278033.8338822, -13570280.995019535, -85095459.3927672, 669951675.0902301, -1041016026.5703218, -4241350570.52619, 19536358548.670235, -19158789931.456783, -52588961930.56695, 168223251386.27505, -131543443714.17932, -183278984759.32788, 500731039137.68585, -395175402811.80865, -83866621459.66833, 443918936157.0502, -420471377306.8417, 207052924562.9713, -54907932888.50713, 6236056730.263589,),
    (9, 7): (-5537.685506625223, 70275.28836444147, 1432194.8403133915, -20502591.084346145, 29691158.739889488, 592508323.2490427, -2831998971.7799306, -487772628.07968, 32638786024.059948, -70496897875.46951, -62531875035.15364, 456706039700.77563, -503779673552.1839, -650638245764.8473, 2119375307389.9958, -1373635599107.5234, -1758554601545.7817, 3640007756944.399, -1912987782878.0613, -1044942776057.9479, 2082243082925.6113, -1292209352199.4456, 389815335189.77374, -48292926381.68949,),
    (8, 8): (26956.281612779032, -287752.7443175291, -7479028.329331124, 86134990.00981177, 23679004.644932132, -3077161905.388599, 9103660424.390543, 23518972784.280266, -154703115855.8646, 108277078595.12758, 805587125662.5165, -1805165807562.2092, -672890155245.4949, 6669143665397.138, -6132703262892.643, -7384886877294.082, 17989877009001.984, -6680625953666.217, -14315112877022.322, 17853687377733.207, -3800827233430.3174, -6918410846679.145, 6365772360949.381, -2267586042740.4272, 310920009576.2226,),
    (7, 9): (-115412.82053471319, 1027788.8260207104, 33623754.973679066, -313584768.22511894, -659891574.7928052, 12850764070.127691, -19440345035.583477, -155138555406.99155, 516911193990.9226, 451041007491.5112, -4074544650661.9634, 3101195098601.7686, 13186035652463.635, -24971415775329.26, -10847664957177.135, 66205224018265.48, -37500185472771.586, -69777795804669.38, 99311193873506.56, -492168373279.2016, -80134019127845.98, 51160427044311.74, 9045641917569.246, -24123027505367.164, 10768904399045.848, -1663085461560.5466,),
    (6, 10): (428894.40807532385, -3139491.0587579524, -129346362.91769879, 971658116.2363682, 4056885717.6650653, -43776518263.068504, 6886509445.733657, 666192636622.6324, -1146605162893.2336, -4150515189210.382, 12899393468582.902, 7742402532790.661, -63390570866544.42, 31574846906545.7, 155509830706127.22, -197328514020298.7, -161495194791368.9, 431593958485279.1, -57955664355845.42, -444813800230214.8, 304547176185415.8, 164529366533754.03, -262168848376474.25, 51430539333046.6, 65933562346693.24, -41287526582645.05, 7341963962580.312,),
    (5, 11): (-1357481.5834537165, 7977851.153514766, 419517728.92817664, -2495517054.7161427, -16720780562.050493, 120296564778.19437, 154404724838.8961, -2110123804399.9207, 974123695127.8887, 17443881430511.947, -24448434409173.656, -73513952038406.36, 169708094306922.0, 139392884698962.95, -607701552209729.5, 42904363912061.41, 1241046770899817.2, -768125556097572.1, -1403171934960438.0, 1622188475923667.8, 657623934547413.9, -1631882122398223.2, 237083343503533.12, 785835171244720.5, -396417689594574.3, -105868095076065.58, 125179414423474.78, -26396909127729.652,),
    (4, 12): (3562042.4486459126, -16196313.687936474, -1119546446.8249807, 5105896697.657058, 51476060928.63038, -258447407741.23544, -779649080899.6405, 4982179421789.694, 4004696303571.854, -48152095258426.15, 10206156605278.264, 264344253278752.34, -218798857956960.84, -868622560677829.6, 1161601525559524.2, 1687979001191903.2, -3349241418127554.0, -1649878672532120.5, 5897451215285125.0, -125952827188585.92, -6433283969334752.0, 2343935079955608.5, 4106725553395394.0, -2735980005540132.5, -1230142327980831.0, 1417490532431040.0, -23384761374805.902, -289892454526107.4, 75592403781851.47,),
    (3, 13): (-7445740.904360185, 24634048.351746637, 2366020806.02629, -7808648260.642505, -118977141825.00262, 409347654830.3762, 2227886871742.034, -8418196051278.762, -19993114336865.5, 89749606285710.61, 91027650219177.8, -567320456048460.0, -158541319151866.4, 2286994298876364.5, -406108119093234.2, -6109006264284955.0, 3061509093597577.5, 1.094956944395437e+16, -8409227264715248.0, -1.2972671111828072e+16, 1.3506857028733486e+16, 9542099548494264.0, -1.3665198589678694e+16, -3500771616752033.5, 8599505926079282.0, -192584364085979.72, -3085105840164255.5, 648294322883069.6, 483163296698761.3, -166336791576720.84,),
    (2, 14): (11631310.969882661, -24956069.513924483, -3719130469.3827567, 7939241569.244061, 197650420583.57806, -426477178381.3469, -4137136219101.051, 9165629658162.273, 44999979919399.92, -104192738635599.47, -290053332678279.44, 717931728117709.0, 1184950942733151.0, -3238133498156090.5, -3148099361614568.0, 1.000423894014581e+16, 5326672157182975.0, -2.171397856146111e+16, -4997511985428331.0, 3.344044554553313e+16, 429328409587667.0, -3.637249936872303e+16, 5419838346824587.0, 2.732851001536467e+16, -7462027883028048.0, -1.350004363652553e+16, 5000259547410615.0, 3946328556046746.5, -1769166076587921.0, -517354048506128.4, 264752449010576.62,),
    (1, 15): (-12076459.908236194, 12631699.444247054, 3870206398.1171503, -4026578373.798651, -212116465639.7924, 219760302239.42456, 4707197145849.053, -4860276727827.884, -55912520880766.92, 57569188166122.98, 407553205759865.75, -418643088909794.06, -1970887757079997.2, 2020469839019116.8, 6629237688884788.0, -6784307576344081.0, -1.5953173918642562e+16, 1.6301877173694858e+16, 2.786748357194409e+16, -2.843912426059935e+16, -3.5429954264855304e+16, 3.6114591062243816e+16, 3.2466638305657464e+16, -3.3059636265578148e+16, -2.08954771020249e+16, 2.1257303545350004e+16, 8964660367452270.0, -9112226793253954.0, -2302544207092007.0, 2338662547595411.0, 267877692066913.25, -271890841011735.9,),
    (0, 16): (6252951.493434797, 0.0, -2001646928.1917763, 0.0, 110997405139.17902, 0.0, -2521558474912.8545, 0.0, 31007436472896.46, 0.0, -236652530451649.25, 0.0, 1212675804250347.5, 0.0, -4379325838364015.5, 0.0, 1.1486706978449752e+16, 0.0, -2.2268225133911144e+16, 0.0, 3.213827526858624e+16, 0.0, -3.4447226006485144e+16, 0.0, 2.705471130619708e+16, 0.0, -1.5129826322457682e+16, 0.0, 5705782159023671.0, 0.0, -1301012723549699.5, 0.0, 135522158703093.69,),
    (17, 0): (0.004116174532100558, -0.1435451912617714, 0.7476622234154717, 17.406852664707344, -303.46678583919817, 2333.5123688896692, -11162.912260780962, 36986.085614110714, -89344.6552487736, 161745.1129535532, -222504.7530151235, 233475.9505903848, -185856.02152682137, 110455.69257305047, -47520.161247831835, 13990.576445548028, -2523.356237451336, 210.38069121350432,),
    (16, 1): (0.017493741761427373, -1.2047312883739798, 15.5825858175037, 86.5890481894131, -3710.4089786317145, 40458.787068212616, -253675.3567705414, 1070069.6222161897, -3248396.782720769, 7355848.74033619, -12674303.239228329, 16773645.038581656, -17067629.175551075, 13254968.864237254, -7721700.926729765, 3268570.628208527, -949706.3175882758, 169466.93665834956, -14007.394135452052,),
    (15, 2): (-0.3148873517056927, 12.273113852881455, -53.59185064811658, -2290.6772036175944, 37621.22490130932, -262848.2488454065, 943790.7664735606, -1028025.344067621, -6762626.375391752, 41366114.612001605, -125499626.56636819, 255580406.98638853, -377397143.1511521, 415123779.4372816, -341861189.3905988, 208536877.63718453, -91635722.57096721, 27468865.05686081, -5033745.108190464, 425803.3453172654,),
    (14, 3): (3.2800765802676324, -96.67933028854, -112.63423193569227, 23310.80714526943, -261775.85271599103, 1164162.1628289819, -496559.2890003999, -19173659.260675687, 100071451.4690545, -245502299.53653815, 235592013.0199172, 449752819.57129717, -2186450105.1631985, 4453003805.487835, -5869013445.402624, 5445497144.884944, -3619900808.1147504, 1698500409.5261166, -536403266.2085875, 102592954.74827763, -8995946.815839272,),
    (13, 4): (-28.126656675794948, 672.4061274148572, 3923.0027742411094, -184478.38826358586, 1517201.6195289416, -3164209.771442435, -23002055.4367786, 175533470.37033507, -466812417.7192183, 139279713.39067963, 2700686712.030305, -8570007850.48185, 11810302069.00933, -1982522836.1716015, -23492126554.20568, 50084255352.0223, -58229759405.85576, 44473320754.75568, -22987996260.054356, 7806210483.81309, -1580740407.8140204, 145206151.60548308,),
    (12, 5): (211.55263914008628, -4224.940098789957, -43251.74134167556, 1254182.160429726, -7485158.506456349, -4568023.660884411, 227022834.8162928, -938702289.1774155, 724526057.0202743, 6236985210.141873, -23209795664.548035, 27517713937.46952, 30387474232.202633, -152420631070.71512, 218802804879.79126, -86636170136.24963, -200257074679.8501, 412628499247.9707, -398982960357.5094, 237190515145.8639, -88677639826.11821, 19293416725.354446, -1875137981.327293,),
    (11, 6): (-1422.1038519972467, 24058.585428654464, 353293.9601213775, -7529937.232063499, 30519353.328564867, 136935462.8425037, -1452580522.064141, 3313743472.1081495, 7131959113.1891165, -51757834574.00975, 84074283479.51569, 86166621267.13696, -536729738565.7473, 726934503175.6661, 178310395319.35107, -1842272021666.4443, 2414750712292.84, -799328522685.209, -1582717328019.2083, 2575634999526.0854, -1895910535796.6997, 805182347961.0282, -191368481388.03635, 19877176801.117428,),
    (10, 7): (8583.412535269095, -123693.27764982061, -2401662.899221882, 40196624.09960673, -92280901.54445076, -1162091618.0815856, 7196020966.854902, -4464486448.686654, -77720518749.19374, 243184995452.41718, 524620689.67247087, -1357804667073.7002, 2505107981013.746, 571251995621.9541, -7977288816196.561, 10009535995087.93, 1636872158123.6035, -17011107996379.19, 17480661089120.424, -2397894919553.6084, -10781171958714.598, 11668747363241.65, -5902981900728.495, 1564066749392.6455, -175497012198.5752,),
    (9, 8): (-46424.707222008336, 569781.9745215806, 14061609.697598616, -190351329.7216683, 110965770.059063, 7056724879.1930685, -28208179411.874367, -38715505490.50491, 458474391104.9114, -669813241570.4114, -2008863059832.5457, 7445229660427.708, -2909755851894.6113, -23052242514672.68, 39919804041845.03, 6149531967602.166, -86552671235417.52, 83498380553474.77, 30535812630286.996, -118864805406269.84, 79806510290767.2, 13861517010475.148, -53178964125352.44, 34918068513789.844, -10596251921480.195, 1299970057332.355,),
    (8, 9): (223612.3397860068, -2325696.5750035536, -71595616.21441652, 793261889.9151379, 935541589.0593057, -34429095731.922516, 82968637595.12218, 387534296358.5877, -1927578326475.8555, 44426083243.39954, 14290533964936.885, -22520763381983.633, -35637457643053.516, 131877073570092.4, -44293145580861.12, -290472209538244.4, 387640608684375.94, 143049925735785.28, -686233548741292.4, 398974869326158.56, 353747004552309.0, -573662259575790.1, 181076444959325.97, 156798656578527.22, -164583780116979.7, 59485973954843.73, -8092503448918.072,),
    (7, 10): (-949694.7607382172, 8287157.488581162, 316439406.9606539, -2871543135.555899, -8885526958.669159, 138868788992.44238, -142319576563.88074, -2121544747878.209, 5881662953142.586, 10870193095928.264, -60831595806110.59, 15497514587855.89, 277088917186951.2, -366781316899289.7, -532426670712994.75, 1488507559509252.0, -98507832867182.98, -2703022412565383.0, 2205529683541919.2, 1925976913028218.5, -3658671109106227.5, 632141551479556.0, 2233638934276139.5, -1640576870868557.0, -98578105574686.88, 599174926020490.8, -274974253808480.06, 42198741358133.14,),
    (6, 11): (3506827.4239221006, -25266871.27155789, -1202737242.0965781, 8860713786.906065, 46997376843.19668, -463016846338.184, -159486720676.18085, 8444668080129.99, -11421374800309.645, -67565932908105.04, 172568646904777.7, 224476652921624.94, -1091630785680258.5, 89984593533300.12, 3629472833456889.5, -3113389468347078.5, -6305525556710835.0, 1.0486357077390552e+16, 3794380508767295.5, -1.6947014074574828e+16, 5183156934540200.0, 1.371850131204305e+16, -1.1153937199553238e+16, -3599496304018562.5, 7529227862378722.0, -1832278823352038.8, -1563956161136485.8, 1032988843576386.2, -182776382537515.62,),
    (5, 12): (-11042331.590802329, 64109268.87576661, 3866749744.0284395, -22686528076.6421, -182443064859.35208, 1254579495698.9648, 2322717060203.4766, -25683268679180.324, 3013328114433.2964, 254316020284390.62, -282282598584171.0, -1350351769551452.0, 2572774405512090.0, 3774885571359925.5, -1.1700000028463334e+16, -3586700472473283.0, 3.119324754379479e+16, -9961525693510520.0, -5.004017709294081e+16, 3.965003196397582e+16, 4.483180184838174e+16, -6.198640923493772e+16, -1.3989948671658056e+16, 5.135555448576146e+16, -1.100180421455367e+16, -2.1046813310210908e+16, 1.1496129520403442e+16, 2273532770771631.0, -3084971627670180.5, 648004438093910.8,),
    (4, 13): (28852246.00439572, -129987611.57885312, -10251383095.8337, 46308001550.64923, 544439795019.5248, -2669750601756.5693, -9905994771745.646, 59171570515340.9, 70714118234690.64, -665765335217671.0, -37144362380760.33, 4332397215352775.5, -2626606114531991.5, -1.7374398199100288e+16, 1.911938536733782e+16, 4.362104894450905e+16, -7.023188100758139e+16, -6.509745189765168e+16, 1.5856595101193725e+17, 4.211833826779228e+16, -2.307800019825455e+17, 3.1749174532975988e+16, 2.1446022194088304e+17, -9.33503090206643e+16, -1.1835336214958053e+17, 8.619786601527909e+16, 3.0077552310664776e+16, -3.865439954867445e+16, 1581848239724858.2, 7066954783269468.0, -1837309350452449.2,),
    (3, 14): (-60095106.67772708, 197493124.15516347, 21557430028.353283, -70692647237.46902, -1235702187393.4722, 4200842061868.692, 26732011396850.273, -98426947335896.53, -283695485540883.8, 1203761176084576.8, 1613902479418711.8, -8809325463478950.0, -4516248439796787.0, 4.163270041963649e+16, 177064763228097.4, -1.3268804705291888e+17, 4.582847351914581e+16, 2.912036552775815e+17, -1.7952812350956787e+17, -4.404153888566908e+17, 3.796276793128166e+17, 4.476415546159812e+17, -5.104265128812206e+17, -2.8297047168951098e+17, 4.490699216054519e+17, 8.398749380287909e+16, -2.5146955583722368e+17, 1.3275547376518312e+16, 8.157276474687475e+16, -1.7983276777705928e+16, -1.169118812971215e+16, 4016093821634296.0,),
    (2, 15): (93592564.2888305, -199886232.96390942, -33757942909.90798, 71774736837.80896, 2030205562636.7317, -4356986861790.33, -48312562516500.01, 106084150311329.88, 601471204407811.4, -1371720512274815.0, -4481347898101815.5, 1.0812636071180112e+16, 2.14819877267144e+16, -5.622608091896143e+16, -6.864868389169676e+16, 2.0236620313437773e+17, 1.4665815825936083e+17, -5.188704435178171e+17, -1.991288076239852e+17, 9.620712790068082e+17, 1.3351930393835502e+17, -1.2939635470642808e+18, 5.641797023169515e+16, 1.2506326974727232e+18, -2.2927168122164403e+17, -8.466738773807492e+17, 2.4801673029653843e+17, 3.811640778457484e+17, -1.4508548452008784e+17, -1.0250385034866064e+17, 4.6333811142450136e+16, 1.2460827473674392e+16, -6367111622770218.0,),
    (1, 16): (-96920748.14823936, 101089382.47719589, 35028821243.35609, -36363252528.81727, -2164449400213.9907, 2238447670306.777, 54213507210626.375, -55894546193901.61, -728674757113066.9, 749346381428331.1, 6034639526517056.0, -6192407880151489.0, -3.334858461688455e+16, 3.4157035153051452e+16, 1.2919011223173845e+17, -1.3210966279064779e+17, -3.6183126982116717e+17, 3.69489074473467e+17, 7.459855419860233e+17, -7.608310254086307e+17, -1.1409087720348115e+18, 1.1623342888805358e+18, 1.2917709752431928e+18, -1.3147357925808497e+18, -1.0686610965947848e+18, 1.0866975707989161e+18, 6.278877923819937e+17, -6.379743432636323e+17, -2.482015239175297e+17, 2.5200537869021213e+17, 5.919607892151132e+16, -6.006342073721112e+16, -6437302538396950.0, 6527650644199013.0,),
    (0, 17): (50069589.531988926, 0.0, -18078220384.658062, 0.0, 1128709145410.874, 0.0, -28863837631414.76, 0.0, 400044457043036.25, 0.0, -3450385511846272.5, 0.0, 2.0064271476309532e+16, 0.0, -8.270945651585064e+16, 0.0, 2.4960365126160426e+17, 0.0, -5.62631788074636e+17, 0.0, 9.575335098169139e+17, 0.0, -1.2336116931960694e+18, 0.0, 1.1961991142756308e+18, 0.0, -8.592577980317548e+17, 0.0, 4.4347954614171904e+17, 0.0, -1.5552983504313904e+17, 0.0, 3.3192764720355224e+16, 0.0, -3254192619642669.0,),
    (18, 0): (-0.003773159987758845, 0.14366039506278186, -0.8958786403312504, -18.468105402938104, 367.518208031666, -3135.669600868853, 16633.10483183668, -61364.55131786689, 166151.93639827025, -340147.30900780007, 535247.2560551844, -652120.5591344041, 614872.9256164978, -444923.9061313751, 242633.7622453009, -96536.82812498328, 26458.818107645406, -4467.703534003221, 350.42948534263013,),
    (17, 1): (-0.016979219944914803, 1.2586837294742235, -18.190832644319013, -82.84197838407202, 4557.623426640615, -55148.16731043694, 381215.26570520515, -1776732.5503053092, 5989585.633953795, -15168714.948222002, 29498251.693350397, -44578916.51669148, 52586079.847582944, -48304317.96917047, 34217499.004304826, -18338059.677362233, 7192720.220351704, -1948419.916257568, 325860.66598330135, -25360.418232790562,),
    (16, 2): (0.3247275814464956, -13.737525277878516, 74.50703166134704, 2733.089615936746, -50680.643770514485, 395987.856708211, -1640130.994902256, 2685547.9820765182, 9006499.58575239, -75015722.0748869, 265967769.36752424, -622852040.869358, 1060882550.2867978, -1361201903.6374931, 1331296452.051081, -990298868.6414176, 552070836.3096534, -223735258.4048331, 62312140.46618238, -10674441.464371013, 848468.6414067112,),
    (15, 3): (-3.6080842382943956, 116.12778434321203, 36.43795227222143, -30418.374748421178, 384615.40596982045, -1985400.013138668, 2222712.27057068, 29362356.84634484, -189950790.3611761, 561926047.9615799, -786115475.6364756, -454760813.30746543, 4887149299.620005, -12459600599.960764, 19754790143.49002, -22115603623.94971, 18098620163.30183, -10841452258.737535, 4649375911.776721, -1355874697.034429, 241366633.82590687, -19823956.081155963,),
    (14, 4): (33.14927393932976, -870.4844079256593, -4430.609612175025, 261522.9547518748, -2449235.238661565, 6828009.202340268, 32649434.350991774, -327373287.9023496, 1078497923.263384, -980469692.5581532, -4885750124.627829, 21400849148.62277, -39113609870.16758, 25744927286.377655, 47441634632.57089, -158849954845.4732, 236997281234.43057, -228796757192.20114, 153180635135.2799, -71278980574.26077, 22144641643.737885, -4148271957.4004955, 355416076.983779,),
    (13, 5): (-268.50911890857105, 5927.831178953508, 56478.25801981374, -1935851.4578739773, 13474574.773196, -2944144.0774601623, -399617020.62316376, 2047279772.2978039, -2882009531.456685, -11012004603.205591, 58301448127.07643, -100793261808.64186, -14140817478.904724, 406227680198.2995, -826945316367.711, 676167216247.728, 309915153491.8678, -1520579833026.3262, 2031268489746.0256, -1617703725439.5205, 843371025181.6508, -284526622598.5975, 56797774891.742775, -5121516498.519583,),
    (12, 6): (1955.3927964962143, -36832.34603440846, -513345.54531648965, 12721738.963421505, -63066053.48483302, -198685947.35123277, 2943602359.935635, -8937322704.490719, -8717045206.417433, 123152183637.42459, -285265491963.2601, -29051451025.193214, 1454794134752.7725, -2949936051973.4683, 1179440875269.6687, 5253620742654.726, -10981608856841.672, 8246442019242.909, 2497768207943.7026, -11825565945947.252, 12817282996064.365, -7860110221984.001, 2949175921396.8916, -636077786486.8861, 60899069294.61659,),
    (11, 7): (-12875.118802903644, 208323.80518591424, 3862636.992738224, -74885575.4111533, 236119984.4266261, 2116270278.0007312, -16774466335.65142, 22885681435.51164, 164460834520.14612, -721628567351.1855, 513799413278.17053, 3396725667625.5234, -9608913523660.006, 4438745209006.539, 23541723110355.445, -49114154078918.6, 21695799013994.84, 56323932383659.67, -102998958295354.55, 58775164707994.07, 28585418959066.35, -73217660304035.94, 57881864528184.555, -24972509422504.113, 5914676158597.421, -606878572330.8993,),
    (10, 8): (76600.76691631375, -1066261.82193359, -25112207.172200236, 394771483.72341394, -564835124.2920297, -14965515309.929886, 77335953578.0641, 32853274207.204403, -1207005954236.8193, 2742505840336.123, 3748631432886.9434, -25404346919344.215, 27274280054678.43, 60327301908919.8, -185100391454985.7, 94155736584448.03, 299534280952817.9, -543106730418712.0, 156782778644293.38, 521130770354175.1, -688229961104815.4, 222261754441543.5, 253894240296275.72, -331325666506919.9, 173331006755625.34, -46016161417280.945, 5111948963328.048,),
    (9, 9): (-409955.9562743458, 4895994.657712627, 143035567.8067618, -1853660861.6260724, -551368082.736758, 84216270161.25505, -283432361840.6533, -819897903327.5531, 6187659796604.379, -5009050922446.028, -41970047073665.65, 108156394854643.62, 48448178867535.15, -538283112440809.44, 556418298197186.9, 875746501339435.4, -2359062299495149.5, 789258714217472.6, 3135425540870215.0, -4065884889522683.0, 57009911477567.57, 3753829948815773.5, -3047412370682564.5, 48658535409917.586, 1396791209064941.2, -980900461964316.9, 300134954391004.9, -36522243698317.914,),
    (8, 10): (1958745.4440225728, -19936469.81444962, -714989797.9291465, 7678735622.904745, 16256458351.652927, -394474410146.9691, 749312009193.2108, 5857586063802.98, -23868682339615.906, -17701709440833.67, 234217495980715.44, -243642976136190.78, -936966855808055.6, 2288521265425473.0, 746571250707588.2, -7792669117245050.0, 5979898395673462.0, 1.0941656723895364e+16, -2.0318010059945124e+16, 538438207222541.75, 2.4875646730192372e+16, -1.8950132953303904e+16, -7913839151269834.0, 1.8418911436877252e+16, -7280706850719377.0, -3589548115174765.5, 4452078323366501.0, -1636209111660755.0, 221120127812932.6,),
    (7, 11): (-8266093.213530666, 70907359.34372069, 3119386268.317469, -27674998130.346806, -114359547162.82106, 1552290971002.4844, -834256383633.5261, -28839100730508.355, 66930435323689.83, 208100472701559.4, -888157168856577.8, -257995343920476.38, 5288956569059730.0, -4636415004065185.0, -1.54542221677288e+16, 2.9198349333963084e+16, 1.581607926122148e+16, -7.837098397196027e+16, 2.9634651251518252e+16, 1.0400424108677826e+17, -1.0997919750102565e+17, -4.741217450601167e+16, 1.3241419645749312e+17, -3.9032512214307976e+16, -6.324415905236706e+16, 5.307440505402442e+16, -1033035401230868.4, -1.5634509456250168e+16, 7394434169405269.0, -1128722385103256.2,),
    (6, 12): (30366411.874706406, -215865524.18950856, -11744342517.692469, 85116937730.24515, 552830894167.9829, -5093095363471.361, -4395865502332.7456, 108972602267037.9, -109132728481603.92, -1069097282879744.8, 2289916256066587.5, 4985451891316291.0, -1.820835579384714e+16, -6731566602257231.0, 7.747130601158238e+16, -3.885371074023904e+16, -1.8727735484118976e+17, 2.1978835612981392e+17, 2.3371723962737395e+17, -5.146164070890579e+17, -4.4370727692977224e+16, 6.532368350970761e+17, -2.879116875899472e+17, -4.257521966158256e+17, 4.042828981719376e+17, 7.309038008596014e+16, -2.2369579582053504e+17, 6.311843752385983e+16, 3.900855510627939e+16, -2.730397624600475e+16, 4810523482584608.0,),
    (5, 13): (-95212411.81450588, 547027631.6277542, 37489699198.483955, -217383518669.04904, -2056903908778.7983, 13650005213609.654, 33408136112347.22, -321540359323357.94, -75381647195538.95, 3733766896762925.0, -3119067985810621.0, -2.4022832975238664e+16, 3.827844489637833e+16, 8.78675388973922e+16, -2.170336422615717e+17, -1.6056082815668653e+17, 7.26020533783707e+17, -1.1624043522864008e+16, -1.5223623067021934e+18, 7.7531163824971e+17, 1.9787611194795139e+18, -1.893992690372982e+18, -1.4174978962037568e+18, 2.3619728543115167e+18, 2.3314433309365414e+17, -1.6592793531712338e+18, 4.4881072712482477e+17, 5.881991962036166e+17, -3.45454485470657e+17, -5.044581976661164e+16, 8.049661107365934e+16, -1.6851697210023746e+16,),
    (4, 14): (247892315.0456242, -1107970260.8007426, -98852583860.18839, 442865240430.99365, 5993305799781.839, -28826628192865.19, -128088532917371.03, 726738467732481.8, 1166526411156289.0, -9391385517282648.0, -3106656825390589.0, 7.114098871632074e+16, -2.7731404210793196e+16, -3.38904409990252e+17, 3.0257250906172563e+17, 1.0463386674035021e+18, -1.4072681339727962e+18, -2.0701739550715064e+18, 3.9651807806290074e+18, 2.374391770793808e+18, -7.339262525443131e+18, -7.622779219263886e+17, 9.075347974125979e+18, -2.0785494027300756e+18, -7.319621902792078e+18, 3.640253723414131e+18, 3.5369643625842606e+18, -2.7964841805008205e+18, -7.642826112206271e+17, 1.1056369264639956e+18, -6.720831412918104e+16, -1.8267918981729786e+17, 4.737160477873601e+16,),
    (3, 15): (-514759103.5885678, 1681810143.8355932, 207006185291.1414, -675043283213.8223, -13405965449077.236, 45116161127932.8, 331088093278066.7, -1193727843480034.2, -4080336656264095.5, 1.6576144297324532e+16, 2.7917504645312216e+16, -1.3873257460213043e+17, -1.0490413774706843e+17, 7.57112764355473e+17, 1.447544265180201e+17, -2.823222482974352e+18, 5.3700145211790086e+17, 7.383820063359171e+18, -3.5063603633844086e+18, -1.3675931553692998e+19, 9.764014845970151e+18, 1.7800421337671522e+19, -1.6903638415924283e+19, -1.5743338858575475e+19, 1.95664643431116e+19, 8.617053109892948e+18, -1.5228869846407854e+19, -2.0128658426311314e+18, 7.680256317201065e+18, -5.977794688237686e+17, -2.273143125456809e+18, 5.2098694585251725e+17, 3.002694475423359e+17, -1.0295029923422722e+17,),
    (2, 16): (799596172.2229747, -1700802806.2142649, -323114868787.7614, 684563249441.5875, 21824892895342.18, -46618910158455.19, -585459402529523.4, 1275908588305904.5, 8260049012575802.0, -1.8604461883737876e+16, -7.0278193664208776e+16, 1.6613007637705776e+17, 3.890265070956938e+17, -9.84692753051282e+17, -1.4605727329563133e+18, 4.072773029678534e+18, 3.7767693726295803e+18, -1.2129962569242937e+19, -6.617088939028393e+18, 2.649918790935426e+19, 7.188792094112127e+18, -4.280818265775687e+19, -2.877315515704186e+18, 5.105078894161098e+19, -4.5466810643023375e+18, -4.4369726542163214e+19, 9.388978307276972e+18, 2.732446633835857e+19, -8.460627661936374e+18, -1.1297448674866868e+19, 4.3991314146232796e+18, 2.81278950831445e+18, -1.2804845045601482e+18, -3.1874811726967635e+17, 1.6265482422677558e+17,),
    (1, 17): (-826148227.2778172, 859527953.6324766, 334447077116.1742, -346499224039.27954, -23138537480922.918, 23891010244530.168, 649436346706832.1, -668678905127775.2, -9801089197554388.0, 1.0067785502249746e+16, 9.143521606392622e+16, -9.373547307182374e+16, -5.718317370748216e+17, 5.85207918059028e+17, 2.5226384237334446e+18, -2.5777780614106783e+18, -8.112118666002138e+18, 8.278521100176542e+18, 1.9410796688574943e+19, -1.9785884547291365e+19, -3.4949973108317356e+19, 3.5588328781528633e+19, 4.749405018804868e+19, -4.831645798351272e+19, -4.8446064128163045e+19, 4.92435302043468e+19, 3.6518456416349577e+19, -3.709129494837075e+19, -1.9734839803306496e+19, 2.0030492834067644e+19, 7.232137329505965e+18, -7.335823886201391e+18, -1.6098490889372283e+18, 1.6319775987507983e+18, 1.6433672729195478e+17, -1.6650618903838323e+17,),
    (0, 18): (425939216.5047669, 0.0, -172283238717.3505, 0.0, 12030115826419.191, 0.0, -343965304743075.94, 0.0, 5335106978708839.0, 0.0, -5.1605093193485224e+16, 0.0, 3.37667624979061e+17, 0.0, -1.5736434765189599e+18, 0.0, 5.402894876715982e+18, 0.0, -1.3970803516443374e+19, 0.0, 2.757282981650519e+19, 0.0, -4.178861444656839e+19, 0.0, 4.859942729324836e+19, 0.0, -4.301555703831444e+19, 0.0, 2.846521225167657e+19, 0.0, -1.3639420410571592e+19, 0.0, 4.47020096401231e+18, 0.0, -8.966114215270463e+17, 0.0, 8.30195760673191e+16,),
    (19, 0): (0.003475278936093673, -0.14365880042679782, 1.0483412263827627, 19.393942341158475, -439.2498702825206, 4133.171321592841, -24144.42634329207, 98412.25736643035, -295977.0948713559, 677879.8516590431, -1204341.7268168184, 1676109.954430304, -1832719.80638769, 1569047.5053890944, -1040755.9282467399, 524396.6295730611, -194064.03905682793, 49755.762872316925, -7898.041782640307, 584.8786637584839,),
    (18, 1): (0.016507574946444947, -1.3115963439479945, 20.993022920066736, 75.21317807159087, -5520.997732561344, 73771.39635741922, -558903.7929986767, 2858924.902666056, -10621094.459016673, 29814772.524247523, -64746868.65830062, 110294726.15650424, -148401100.6394853, 157872725.31521255, -132152802.17243338, 86047495.36657812, -42696629.794580184, 15601623.799554098, -3958327.886358789, 622917.0568471618, -45803.02817322612,),
    (17, 2): (-0.3342783926655102, 15.272726220373944, -99.43682243160887, -3215.2496147668767, 67017.2881590484, -580930.9416896395, 2730931.0466816756, -5874989.4194411235, -10071345.47477824, 128727395.39861862, -532979362.09756476, 1422977246.2583575, -2761800305.320448, 4068377855.2773657, -4627852621.013599, 4079957450.3257475, -2769216600.859979, 1421959439.3813088, -534835129.9100748, 139114521.02414906, -22374635.160968184, 1677363.9461450074,),
    (16, 3): (3.946342135634495, -137.92119829401295, 77.56725390635403, 38999.9989733857, -551304.6692919065, 3248704.51591198, -5731749.5785653265, -42049644.65599518, 342244378.18308574, -1197527593.6428852, 2173091198.6306477, -385893190.0823806, -9726297219.592134, 31746976959.59743, -60014642503.05331, 79581616412.27097, -78008293852.72937, 57282761423.935196, -31273581530.908302, 12359258767.263084, -3349330813.6285625, 557748702.582035, -43086088.028927885,),
    (15, 4): (-38.67415292921805, 1108.5473231588687, 4798.622823766499, -362469.63861133, 3826359.8118723175, -13343990.687563531, -42081154.257194, 579782840.21123, -2306224746.368471, 3356665315.5748987, 7418592925.12806, -48625973060.20102, 113159698157.26828, -121040101104.31819, -52812376742.730156, 433622116736.64575, -838777322175.2982, 1003091429352.6334, -837549100087.4921, 501319693444.14874, -212521514058.16953, 60902215829.38713, -10618199836.15095, 852572596.0065482,),
    (14, 5): (335.6363986357138, -8133.157840564545, -71696.9285752554, 2904124.895010138, -23201768.788910393, 23066010.32720682, 666504052.2109526, -4178069139.6236362, 8436176469.678955, 16165531960.404898, -133146916309.65027, 307728676980.446, -154277654511.68665, -912052190781.7699, 2658842980732.4873, -3250772427864.6597, 678693603105.0629, 4422004604447.02, -8559726927987.993, 8911185470916.463, -6108985430727.168, 2848124835977.7637, -876935792689.9896, 161838831926.86328, -13614495427.842623,),
    (13, 6): (-2632.259533744904, 54759.09268244899, 723411.4548784728, -20744473.20780657, 122133228.38943665, 251001533.9084692, -5627729631.234328, 21599395798.798298, 2012815142.6178112, -266421667428.29752, 829468605604.943, -480629711720.88403, -3359845189956.071, 9915249263793.625, -9145229817794.701, -10539156923940.316, 40295203183616.43, -47765032002800.88, 13218265937506.373, 39485885750475.85, -67526086149861.48, 57348474885921.91, -30444135406142.145, 10264151863971.293, -2028714357264.0474, 180214088880.83493,),
    (12, 7): (18776.214920901148, -337911.8074197746, -5990195.959257338, 133534147.6018535, -537512634.0615584, -3588724244.3531, 36417496698.245056, -76323567489.93906, -307322636961.3645, 1910279026759.5256, -2624055887935.309, -6998228951306.757, 30986125333436.67, -32875533377529.004, -51490338095529.71, 189805365268113.0, -182943795905154.22, -106210406691307.81, 454408621137017.6, -460736165192173.2, 76251990750677.42, 317994920595548.5, -409051637518945.3, 261741964804181.8, -99059250173934.25, 21251092749863.832, -2009720151967.4053,),
    (11, 8): (-121864.85645777188, 1902546.7985266747, 42906209.633695945, -775785727.2393166, 1767844834.6862648, 29613899676.894085, -192990980297.69592, 77042167775.75954, 2865171379114.6797, -9165130189752.268, -3321611506957.942, 74443305002882.81, -133737763909220.22, -99878060571769.9, 684856165837830.6, -769121877044303.8, -654593504254131.2, 2552102181110911.0, -2092141450956982.5, -1258400524514621.0, 3962933143009677.5, -2973327247227546.0, -183556987119951.1, 2076139076964741.2, -1800456847390386.5, 793067699376716.9, -187683177027358.75, 19062737197952.688,),
    (10, 9): (717422.9234801051, -9706446.198816985, -270708802.45251536, 4053572822.1401124, -2277636991.4931536, -190580119946.22464, 839724670414.6024, 1397183167196.9414, -17630545552672.06, 27839888677031.08, 103163609711211.69, -415331708286641.44, 143412155850059.44, 1775357050987765.0, -3284591439433843.0, -1209646424345340.8, 1.0570265899695342e+16, -1.0133345295754902e+16, -8579451392725409.0, 2.5315860894204024e+16, -1.4190237605612872e+16, -1.4259030647708072e+16, 2.5691977536502348e+16, -1.1578455333773084e+16, -5613916559895170.0, 9665401457011262.0, -5261864451944750.0, 1402700597812465.8, -154525509374423.28,),
    (9, 10): (-3808671.696710558, 44462447.40276365, 1511586931.0579574, -18914697832.24712, -22716193255.717396, 1022127311383.2216, -2870273395765.3857, -14130556326540.385, 82478499566527.66, -10950775801005.896, -764525707973746.1, 1441971921099906.2, 2348022788472130.0, -1.0644624070924414e+16, 4688603827213042.0, 3.0614134261954244e+16, -4.8846112513487464e+16, -2.0904943855903576e+16, 1.1990617886713128e+17, -7.819878997656774e+16, -1.0162259948427626e+17, 1.796547717244041e+17, -4.241624369921207e+16, -1.1602753429229707e+17, 1.1266018467016965e+17, -1.5099181938787284e+16, -3.773308045237075e+16, 2.868254436351831e+16, -8865691817210284.0, 1071406442343787.5,),
    (8, 11): (18082078.904598333, -180712940.77897123, -7451341689.894852, 77994798280.12076, 241185507049.79126, -4653482728109.206, 6543120692686.01, 86026248270802.72, -296499450855897.25, -488234920810732.2, 3704829660298700.0, -1970147284760137.0, -2.0378487943423324e+16, 3.619675015847562e+16, 4.406040694793519e+16, -1.765874086205845e+17, 4.68339616579284e+16, 4.013007393962941e+17, -4.5453528858293664e+17, -3.488738605203137e+17, 9.701920377511095e+17, -2.6599484202753446e+17, -8.73026109952076e+17, 8.256965832577645e+17, 1.3824062420554598e+17, -5.977731957741513e+17, 2.7715286401241066e+17, 8.159354381663962e+16, -1.2595599982393112e+17, 4.715630669467903e+16, -6336800110271575.0,),
    (7, 12): (-75916029.68676601, 641770609.7727859, 32179691095.219444, -280133605313.5728, -1462402748233.9255, 17979708896731.027, -777524399163.9818, -395464819569217.7, 760820065359819.4, 3668556447603451.5, -1.286365836900145e+16, -1.1694955999034874e+16, 9.619200333242622e+16, -4.426278105138544e+16, -3.768566204157747e+17, 5.155776275368779e+17, 7.22860117306647e+17, -1.9469166164041948e+18, -1.4104678011737685e+17, 3.8280689815764644e+18, -2.3543382676958577e+18, -3.8236754487494815e+18, 5.101388089118845e+18, 8.909395488529638e+17, -4.784486576353158e+18, 1.8801720812511114e+18, 1.8211687528595817e+18, -1.751060834312121e+18, 1.3616834742802568e+17, 4.27914412857061e+17, -2.0906243184004797e+17, 3.17656051003468e+16,),
    (6, 13): (277702867.7923088, -1951336414.045466, -120231444338.58698, 859298599255.6543, 6658979991572.664, -58263863827559.16, -81649559109085.52, 1438993371081243.5, -945130360095679.8, -1.6801430971344816e+16, 3.023004243686519e+16, 1.0029448788139688e+17, -2.987054535536104e+17, -2.643305644582709e+17, 1.572858094219815e+18, -2.3634489270638854e+17, -4.899328438448869e+18, 4.0084251447323075e+18, 8.943991363398901e+18, -1.3488201168119527e+19, -7.774188376853192e+18, 2.421369338708288e+19, -2.522283845409552e+18, -2.5056067141812974e+19, 1.3958180233519352e+19, 1.3331847930721782e+19, -1.4745230718846812e+19, -1.1809220549758172e+18, 6.889332015835529e+18, -2.173599133293283e+18, -1.0203389945825261e+18, 7.60646071087314e+17, -1.3351790284553773e+17,),
    (5, 14): (-867623102.6596848, 4939706556.8328085, 381551077249.3584, -2190076579370.6763, -24006658618348.918, 154800727306243.97, 475680647872641.0, -4148124575842175.0, -2474634484732375.0, 5.5587662205918504e+16, -3.1560788529590572e+16, -4.222478647912958e+17, 5.6051666662727795e+17, 1.90727317496596e+18, -3.9323029675684854e+18, -4.932871548274378e+18, 1.6102125737787595e+19, 5.031223533450961e+18, -4.218388778980318e+19, 1.0324022705575588e+19, 7.20889963443876e+19, -4.825555781841389e+19, -7.747998386903155e+19, 8.739232346149981e+19, 4.418850276937009e+19, -9.077476222186334e+19, -2.9583981743985446e+17, 5.521546520073686e+19, -1.7576702300855886e+19, -1.7141790303292713e+19, 1.0779793470499723e+19, 1.1424354624916764e+18, -2.2176368071336878e+18, 4.628959961962282e+17,),
    (4, 15): (2252071078.199984, -9995977366.803505, -1001493355943.971, 4454503269471.008, 68645318081490.27, -324893989479185.5, -1694618319979806.0, 9233134636521040.0, 1.8787866832565236e+16, -1.35535579906838e+17, -8.334191500771758e+16, 1.178387041009986e+18, -2.044448580736753e+17, -6.5391497209862e+18, 4.576086441639487e+18, 2.406924858294409e+19, -2.7222316146725384e+19, -5.923377154555633e+19, 9.42424017440202e+19, 9.395331358650892e+19, -2.152852964458851e+20, -8.056108261146447e+19, 3.36888142015015e+20, -6.192843871596869e+18, -3.611955884309333e+20, 1.0990690619111619e+20, 2.5651148399489732e+20, -1.4202160259524184e+20, -1.0960671369699421e+20, 9.370634277628476e+19, 2.009465438173552e+19, -3.31309403894312e+19, 2.559304290403623e+18, 4.991815512251851e+18, -1.2915323297675315e+18,),
    (3, 16): (-4664311004.634019, 15160984352.875677, 2089744033468.2886, -6781108821420.386, -151728740424855.38, 506237384942873.5, 4236140792680997.5, -1.5010534191951872e+16, -5.978261659882866e+16, 2.3460890453787434e+17, 4.7977185053312e+17, -2.2229244413129313e+18, -2.2463205814065836e+18, 1.3838957204068766e+19, 5.320170531628099e+18, -5.946676379955391e+19, 1.966334471330212e+18, 1.816917195255276e+20, -6.1244200153457754e+19, -4.007513316110058e+20, 2.3265358696617522e+20, 6.392851681230016e+20, -5.1164994635212246e+20, -7.271139105107726e+20, 7.522656024069931e+20, 5.65691462417527e+20, -7.648634942205923e+20, -2.6916443825720607e+20, 5.33721744894285e+20, 4.6775900287494455e+19, -2.447986334289268e+20, 2.4188697247319953e+19, 6.660982708349898e+19, -1.5765242842247477e+19, -8.158747348918241e+18, 2.792608815823536e+18,),
    (2, 17): (7228796988.680902, -15321294396.78861, -3252762332008.7964, 6869723746170.064, 245128906657268.62, -521463625179823.8, -7358058667449924.0, 1.5932838372540948e+16, 1.1665952065028016e+17, -2.6002889707797357e+17, -1.1221358740317435e+18, 2.608491446955782e+18, 7.082973363650835e+18, -1.7455916184389292e+19, -3.0708485088643056e+19, 8.204778086372383e+19, 9.355486951090407e+19, -2.8005529671551998e+20, -2.003435318579493e+20, 7.089160529740414e+20, 2.908906980467747e+20, -1.346292114802581e+21, -2.4694757773317947e+20, 1.9244342413858683e+21, 1.872627951304314e+19, -2.0598548747826362e+21, 2.604223003271726e+20, 1.62571575387608e+21, -3.825433261117566e+20, -9.180026605133584e+20, 2.973087500412141e+20, 3.5087530785732166e+20, -1.392812421499455e+20, -8.13222735648703e+19, 3.724960394963276e+19, 8.630118827292358e+18, -4.3987192822428257e+18,),
    (1, 18): (-7453936288.833421, 7737895766.503265, 3359523154988.335, -3474378647466.5684, -258647490268012.62, 266667567485625.4, 8083184661462285.0, -8312494864624335.0, -1.360452279570754e+17, 1.3960196594288128e+17, 1.4191400628208438e+18, -1.4535434582831672e+18, -9.961194936882299e+18, 1.0186306686868339e+19, 4.9569769510347235e+19, -5.061886516135988e+19, -1.8099697836998538e+20, 1.8459890828779605e+20, 4.959635248337398e+20, -5.05277393844702e+20, -1.0339811181189446e+21, 1.0523630046632814e+21, 1.6506502706394513e+21, -1.6785093469371637e+21, -2.0168762326698067e+21, 2.0492758508653057e+21, 1.871176731166678e+21, -1.899853769192221e+21, -1.295167157451284e+21, 1.3141439656190683e+21, 6.478724695021506e+20, -6.569654164425317e+20, -2.2127494771860934e+20, 2.2425508169461757e+20, 4.617548820864288e+19, -4.677322915632758e+19, -4.4415473196015724e+18, 4.4968937036464517e+18,),
    (0, 19): (3836255180.2304335, 0.0, -1727704012352.9995, 0.0, 134124169151806.39, 0.0, -4261935510426898.5, 0.0, 7.351663610930971e+16, 0.0, -7.921651119323832e+17, 0.0, 5.789887667664653e+18, 0.0, -3.025566598990372e+19, 0.0, 1.1707490535797259e+20, 0.0, -3.434621399768417e+20, 0.0, 7.756704953461136e+20, 0.0, -1.360203777284994e+21, 0.0, 1.8571089321463453e+21, 0.0, -1.9677247077053125e+21, 0.0, 1.6016898573693598e+21, 0.0, -9.824438427689858e+20, 0.0, 4.392792200888712e+20, 0.0, -1.351217503435996e+20, 0.0, 2.5563802960529236e+19, 0.0, -2.242438856186775e+18,),
    (20, 0): (-0.0032146330158866476, 0.14356240277027296, -1.204619646882429, -20.168456173458775, 518.8742918964464, -5356.138575623936, 34251.605164339824, -153208.94532588692, 507902.33601214644, -1289805.4171527969, 2559825.9135840526, -4017099.3767606085, 5011708.836981256, -4970606.806394471, 3897155.2028868115, -2386294.887369808, 1117440.254077815, -386545.3177751703, 93100.55609711532, -13943.40478521202, 977.9477721949363,),
    (19, 1): (-0.016073165079433238, 1.3635392001522468, -23.988674728032787, -63.132012795832125, 6604.952610809124, -97045.67923736235, 801657.2728066134, -4474517.095997558, 18199113.083214093, -56200747.16365198, 135092421.12264493, -256677900.558693, 388880323.01000994, -471426628.3616784, 456625794.92011493, -351059256.54394984, 211479490.836935, -97691565.18719365, 33411936.583050836, -7971595.077075647, 1184542.8682899259, -82543.20897818568,),
    (18, 2): (0.34356390357288547, -16.877554975680216, 128.72008710909665, 3734.0602559246718, -87170.60654264734, 832649.9921826721, -4387403.99427153, 11604690.687472511, 7457341.480476174, -209493806.5625999, 1016155649.8346614, -3072986437.741523, 6730495092.119328, -11241302417.63828, 14636567617.293488, -14976807896.384174, 12028886739.737427, -7510755621.957641, 3575615299.2634296, -1254884231.1636522, 306209619.53445846, -46416225.67695538, 3292665.5363651114,),
    (17, 3): (-4.294548794661068, 162.17543754394057, -237.26766370880605, -49222.68926106891, 773241.4161034302, -5134716.4077216545, 12221476.516516412, 55748860.207886316, -588710425.1270076, 2405965804.046837, -5348632037.576323, 3883666493.0576153, 16852126735.673628, -74249008085.03516, 166848921389.41107, -258676072284.0083, 297803833427.4903, -260711452638.58383, 173960420490.20377, -87334825201.02567, 32021392953.551464, -8107111739.6869335, 1268423439.8802135, -92497881.92839965,),
    (16, 4): (44.716989324408374, -1391.4405003020813, -4939.578371476888, 492436.0158344768, -5810255.517095892, 24342328.70887519, 47130884.1972214, -980532630.2982104, 4633774648.56042, -9141482826.335236, -8108944178.565998, 101350387197.56723, -295273877304.6695, 430127650120.207, -105033478744.23392, -1003881098162.1696, 2621410830351.92, -3847808692089.404, 3910702739467.7275, -2895243214005.6665, 1571242907299.279, -612475895015.4171, 162989145866.95038, -26585122558.386673, 2008753455.8322885,),
    (15, 5): (-413.9515583173804, 10942.552452574604, 88596.10099744066, -4248834.909731513, 38475356.55113824, -66871103.65935051, -1056510700.8188672, 8064793747.645043, -21195245060.808746, -16407597949.085733, 279335468935.9397, -830665736300.632, 854156573347.769, 1635014962185.9436, -7480174802651.66, 12440096961455.87, -8100187834177.29, -9062131263338.06, 30305146124300.61, -41165906366897.48, 35916559869094.65, -21767830690809.453, 9204025533810.957, -2609521606990.72, 448041237968.7042, -35331324514.76806,),
    (14, 6): (3478.342955305766, -79360.81037336215, -991667.9366567894, 32793758.27696986, -224487445.09701166, -247276211.22160548, 10222114643.72132, -48101236935.80637, 31255817813.60242, 526767429022.11926, -2157277639688.9917, 2528051874790.196, 6410668161378.373, -28913726494740.496, 41390817451074.49, 6010188184611.208, -122227419251266.5, 211457837943633.25, -144810690952003.2, -74385511908482.98, 282544269644169.5, -332039220621644.5, 236625313656571.28, -111408376315692.64, 34178020944170.977, -6239812330802.254, 517163566827.0908,),
    (13, 7): (-26719.998156667018, 530604.4665879315, 8995739.43349311, -229237230.5205633, 1126895461.4395995, 5657526403.521776, -74432254707.74084, 211200665524.82074, 492092664323.32776, -4605375541263.212, 9399603137923.299, 10681918721132.229, -87113956885222.2, 145732340445282.2, 56248339255093.414, -606786421991647.1, 932946267531963.2, -154584396428187.47, -1542830668624591.8, 2503158165382114.5, -1450337824413681.0, -758541250404401.2, 2168476033525506.8, -2016083822944010.8, 1098906257059949.5, -371909252747337.0, 73015078233561.31, -6406459071583.371,),
    (12, 8): (187874.98703906496, -3259218.967735524, -70536601.182177, 1455530045.690186, -4561089056.768936, -55016141311.10415, 446297737734.44464, -519639243044.4995, -6179786437043.091, 26750505711372.61, -11221552432897.2, -190248022201192.66, 507314569921981.9, -49148731083821.53, -2096248819580168.2, 3854445604992595.0, -96319409232104.62, -9291901074516834.0, 1.3352275664464718e+16, -1962880499442912.8, -1.637322560968849e+16, 2.1616078282346916e+16, -8494565499319263.0, -7763091195722983.0, 1.3087519153651762e+16, -8841000193261475.0, 3388886433492493.0, -724967307526523.1, 67859022677445.734,),
    (11, 9): (-1206574.916761995, 18290682.119677704, 489014129.088433, -8378202896.52265, 11826425865.57365, 402940781922.1217, -2240676391448.543, -1534108517142.6277, 45439629411525.52, -108525458058272.0, -203427832704380.2, 1360129774299283.5, -1425149806200602.5, -4718080149589224.0, 1.4416409796420272e+16, -5319335993846993.0, -3.659105301427465e+16, 6.358981395768443e+16, -2021679612120076.2, -1.12946423314363e+17, 1.3044707140422147e+17, 4693399033555298.0, -1.4269955408411285e+17, 1.325949524533521e+17, -1.9394653982773292e+16, -5.868192154284496e+16, 5.735214619786183e+16, -2.5906509666879948e+16, 6138476109594783.0, -618156008827285.5,),
    (10, 10): (7046042.638914533, -93089897.78487271, -3019954895.645714, 43491468609.80782, 13948765877.593805, -2448953604364.3154, 9239281089204.166, 29560518874485.4, -251859824668455.4, 232346762265010.12, 2151398425811695.8, -6279411999012312.0, -3202788449808006.0, 4.022064830546097e+16, -4.657770413400854e+16, -8.8328358480774e+16, 2.647487698336751e+17, -8.402367211405722e+16, -5.07648896255403e+17, 7.056214553575956e+17, 1.1483902544301099e+17, -1.0795146060039876e+18, 8.429501402485215e+17, 3.191311463936776e+17, -9.355049184230924e+17, 5.200844149811696e+17, 1.0561873991237224e+17, -2.902615762346122e+17, 1.6547742480073514e+17, -4.437143898112847e+16, 4853315255661672.0,),
    (9, 11): (-37168717.74834102, 425618768.3973084, 16612662048.74204, -201967904142.11115, -430795723444.89874, 12709995849891.186, -29097569382073.113, -227184287512463.4, 1100512212184414.6, 675922447908336.1, -1.313132582316545e+16, 1.7468594606227212e+16, 6.300490876235497e+16, -1.9175391940323837e+17, -3.965599040901966e+16, 8.077932963960022e+17, -8.014134572152861e+17, -1.413368534014738e+18, 3.3456080719850307e+18, -2.966606650733959e+17, -5.534256806758955e+18, 5.119131069289525e+18, 2.8176688085014103e+18, -7.557369301621201e+18, 2.983159670789891e+18, 3.5146976770304307e+18, -4.1356724166811597e+18, 8.99722094525268e+17, 1.0465125042367858e+18, -8.733214820265746e+17, 2.7311554462045357e+17, -3.281058875317955e+16,),
    (8, 12): (175555818.65064642, -1727285040.4560192, -81004935868.41608, 829812054352.5521, 3408973289658.745, -56673426697763.22, 51998516096117.305, 1258406683610602.2, -3709377056739610.5, -1.023091910659693e+16, 5.776936730697329e+16, -313256365504722.0, -4.077465364218434e+17, 5.230365797473838e+17, 1.365368481640556e+18, -3.6191883446503055e+18, -1.057131840972552e+18, 1.1621199925090556e+19, -7.622710660019346e+18, -1.856595791393684e+19, 2.8539168400878264e+19, 8.011333785518841e+18, -4.3971392727893344e+19, 2.0208450874347012e+19, 2.987469270853048e+19, -3.4707552109391864e+19, -2.8011927484255005e+17, 1.973480781252322e+19, -1.0405332950007589e+19, -1.7772735118831117e+18, 3.7238883025912653e+18, -1.4225405155643057e+18, 1.902258119362534e+17,),
    (7, 13): (-733929007.736816, 6126565127.049679, 346980587981.0011, -2972160231181.0093, -18904339091740.477, 215921218766321.97, 99814604007877.3, -5514570277136211.0, 8578790538749408.0, 6.2593878453352e+16, -1.8624158866315606e+17, -3.048162787874247e+17, 1.7071117910208353e+18, -6.0199115918259736e+16, -8.447413752233786e+18, 8.159573694930883e+18, 2.3061818557912343e+19, -4.361842208131013e+19, -2.702550150911443e+19, 1.1732901380563937e+20, -2.709519433630645e+19, -1.780432146265433e+20, 1.469077983647572e+20, 1.3444593454256739e+20, -2.288189760258612e+20, -6.378159170453231e+17, 1.7420878256248606e+20, -8.339351163704186e+19, -5.324125515629214e+19, 5.926826312957301e+19, -7.28223007494147e+18, -1.2264173324371204e+19, 6.203531035439992e+18, -9.388143703085592e+17,),
    (6, 14): (2675171233.2006946, -18608704171.264397, -1288278906968.2898, 9097181965070.607, 82493799494810.25, -692862499927341.6, -1358778828296956.8, 1.9502706630092516e+16, -6083924290910002.0, -2.653560118911347e+17, 3.9636084534514074e+17, 1.9311002606439834e+18, -4.861644948662617e+18, -7.250419059845225e+18, 3.102426474570641e+19, 6.849280089731174e+18, -1.1938273459942072e+20, 6.032528532941054e+19, 2.8564850740745575e+20, -3.1459240393768855e+20, -3.9973969334604385e+20, 7.690343900649749e+20, 2.1297797667594243e+20, -1.1153903363917931e+21, 2.7762200716731184e+20, 9.642770454950676e+20, -6.415503622661209e+20, -4.2095742139099415e+20, 5.4618990735257174e+20, 2.317329064481438e+18, -2.2012773384409255e+20, 7.59861517767054e+19, 2.7911814191840158e+19, -2.2283602887917416e+19, 3.898830789501728e+18,),
    (5, 15): (-8332662989.339941, 47064697174.9408, 4068283010900.411, -23145911262950.914, -290268816417510.4, 1827933446024532.5, 6815029625676666.0, -5.519384727558457e+16, -5.359013469215954e+16, 8.428104458154499e+17, -2.5405517622388496e+17, -7.417915889972171e+18, 8.056502098580502e+18, 3.99778165734045e+19, -7.0142652442521895e+19, -1.3209733920798666e+20, 3.4614641113432103e+20, 2.3614103270035158e+20, -1.1012488869644897e+21, -2.850278880504588e+19, 2.3508114701174668e+21, -9.942177281769045e+20, -3.355467148479081e+21, 2.7377943851017794e+21, 3.0199699582740715e+21, -3.9808165689192455e+21, -1.3410227835800296e+21, 3.542972324748816e+21, -2.548308161687779e+20, -1.8957211617672052e+21, 6.832964027777192e+20, 5.2039702439184256e+20, -3.496048330762301e+20, -2.590366257013816e+19, 6.433750262768987e+19, -1.339484944139842e+19,),
    (4, 16): (21572438396.43234, -95165232016.45753, -10637091889124.395, 47012890041486.11, 817510870333999.5, -3816862849654257.5, -2.300900501413989e+16, 1.213342216740286e+17, 3.0147223318525056e+17, -2.0046621789368392e+18, -1.822880620485194e+18, 1.977750130940622e+19, 9.00814944053348e+17, -1.2594692376510163e+20, 6.4710194915952574e+19, 5.40886600119649e+20, -5.104752544283651e+20, -1.5958089575209118e+21, 2.1574917282235673e+21, 3.203164360941593e+21, -5.965602776221531e+21, -4.0921298685493327e+21, 1.1444217142648928e+22, 2.403773649350372e+21, -1.5480582770913612e+22, 1.7815600354558282e+21, 1.461740118442616e+22, -5.386970532950332e+21, -9.245630408003378e+21, 5.60686302493882e+21, 3.520230397157846e+21, -3.2481406476193314e+21, -5.4361821132648356e+20, 1.0386457205625727e+21, -9.462613872675506e+19, -1.4378686461646961e+20, 3.712770804620536e+19,),
    (3, 17): (-44577581430.19889, 144237344174.40796, 22127499158228.65, -71488954344408.92, -1789184817901754.0, 5925229924564873.0, 5.600264360267877e+16, -1.9557413242249024e+17, -8.949690978852741e+17, 3.4148891974224614e+18, 8.275275755968112e+18, -3.6317674681102844e+19, -4.6346884746277224e+19, 2.5534066967319668e+20, 1.4930592741191342e+20, -1.2490565754411837e+21, -1.5931892585822385e+20, 4.390410894041608e+21, -8.77636057183779e+20, -1.1300140168675443e+22, 5.131127457863666e+21, 2.1461117123579552e+22, -1.4397374365866356e+22, -2.9957139563088613e+22, 2.636281911021991e+22, 3.013455168909501e+22, -3.3737721231318293e+22, -2.0794064257843164e+22, 3.0591301837715885e+22, 8.605194862163509e+21, -1.934433612814856e+22, -9.824323449228999e+20, 8.135036220720522e+21, -9.488127057338783e+20, -2.0481286322396324e+21, 4.980423207120967e+20, 2.3383712923077945e+20, -7.991943783023272e+19,),
    (2, 18): (68948910671.70914, -145671212044.63028, -34358354542322.8, 72358960261287.2, 2871846060655925.5, -6087238608168111.0, -9.584055525060782e+16, 2.0637918284584557e+17, 1.695210435912921e+18, -3.745245099053605e+18, -1.8279655474326442e+19, 4.190333567311e+19, 1.3022333258510927e+20, -3.140308912305267e+20, -6.433579471313227e+20, 1.6617675112040217e+21, 2.2658079832649923e+21, -6.429444903292019e+21, -5.743637060566254e+21, 1.8609110283902574e+22, 1.034519633447649e+22, -4.086293378806069e+22, -1.2464572980359841e+22, 6.853332769237216e+22, 7.747477847772914e+21, -8.777056569160653e+22, 3.28231343118899e+21, 8.517080293586258e+22, -1.342806888641484e+22, -6.154178888812475e+22, 1.5720617192976216e+22, 3.207991680566438e+22, -1.0782953608709891e+22, -1.1399012458231392e+22, 4.6000859796066303e+21, 2.4710610777285397e+21, -1.1379970654109817e+21, -2.4656814091993773e+20, 1.255428947588005e+20,),
    (1, 19): (-70970720834.26302, 73528224287.74997, 35417932253236.49, -36569734928138.49, -3017793805915643.5, 3107209918683514.5, 1.04417420005459e+17, -1.0725871034574362e+17, -1.948190856896707e+18, 1.997201947636247e+18, 2.257670569007292e+19, -2.310481576469451e+19, -1.7659157386377193e+20, 1.8045149897554834e+20, 9.833091446718709e+20, -1.00347958866514e+21, -4.0390842348500544e+21, 4.117134171755369e+21, 1.2536368109154722e+22, -1.2765342869139283e+22, -2.9863314070825375e+22, 3.0380427734389453e+22, 5.508825298004226e+22, -5.599505549823226e+22, -7.892712961621966e+22, 8.016520223765057e+22, 8.75637494928864e+22, -8.887556596468994e+22, -7.447857836767523e+22, 7.5546371605921465e+22, 4.764852637429582e+22, -4.8303488936141805e+22, -2.2183600614487997e+22, 2.2476453427880577e+22, 7.09389189303898e+21, -7.183973059934712e+21, -1.3932272613488434e+21, 1.410269796655863e+21, 1.266977953745528e+20, -1.2819275461201063e+20,),
    (0, 20): (36468400807.06556, 0.0, -18187262038511.04, 0.0, 1561312393048467.2, 0.0, -5.48403360388329e+16, 0.0, 1.0461721131134344e+18, 0.0, -1.2483700995047234e+19, 0.0, 1.0126774169536592e+20, 0.0, -5.8917941350694964e+20, 0.0, 2.548961114664972e+21, 0.0, -8.405915817108351e+21, 0.0, 2.1487414815055883e+22, 0.0, -4.302534303482379e+22, 0.0, 6.783661642951883e+22, 0.0, -8.423222750084323e+22, 0.0, 8.19433100543513e+22, 0.0, -6.173206302884415e+22, 0.0, 3.528435843903409e+22, 0.0, -1.4787743528433614e+22, 0.0, 4.285296082829494e+21, 0.0, -7.671943936729004e+20, 0.0, 6.393286613940837e+19,),
    (21, 0): (0.0029850163718947442, -0.14338875712943985, 1.3643385139175388, 20.776673526858804, -606.5643565449517, 6836.825481198003, -47610.39689746401, 232348.85811778993, -843453.7666188478, 2357046.5731145656, -5179658.220913632, 9069182.475206334, -12744497.572093606, 14407925.981111491, -13074773.438078223, 9455328.81677728, -5376607.759776778, 2351732.4729473237, -763705.1794910436, 173437.87179813444, -24586.836827747265, 1637.8598914694117,),
    (20, 1): (0.015671335952447407, -1.4145745180675466, 27.17725822368829, 46.01397582130577, -7812.846337563064, 125761.71276495779, -1127560.4614720899, 6832455.813338569, -30251032.00595124, 102105201.64954337, -269645794.30317026, 566456034.6512923, -956281522.1679085, 1304191263.475782, -1438337054.1692052, 1278584308.5692968, -908802808.0589362, 509336665.2547443, -220086536.79126534, 70743494.08075719, -15928612.981139822, 2241937.694794752, -148460.90925886025,),
    (19, 2): (-0.35260505893006666, 18.55092045362128, -162.6966179419244, -4285.389772093464, 111724.66004275971, -1169136.9925713963, 6836522.093405028, -21378316.96253535, 3506002.3700803258, 323333043.5410956, -1852190813.212419, 6314648577.645524, -15485355873.71901, 29030401459.75241, -42722702298.92294, 49933238856.01237, -46475391303.63217, 34296521681.921448, -19833532439.46505, 8802482390.361681, -2895904589.777138, 665526490.7884035, -95400074.4369973, 6422527.862446284,),
    (18, 3): (4.652427860882824, -189.00455655130756, 451.25618254734155, 61253.076062781874, -1063805.876141102, 7878672.441951892, -23468912.53126621, -66771216.57610663, 970955064.5256284, -4597591831.898391, 12110434054.778008, -14291515284.065948, -23679736329.049965, 160026133048.76974, -428877763700.1591, 770495367809.0015, -1026779633595.3162, 1050233025450.8524, -832765943621.9764, 509836977185.6731, -237075591961.3111, 81102197860.63136, -19271241595.033478, 2843681809.9092402, -196390622.76896247,),
    (17, 4): (-51.293017166233135, 1724.2514913722105, 4746.665527984911, -657170.8066799592, 8605485.258051755, -42148230.83166975, -39792476.5845041, 1590085168.8380451, -8838161346.430307, 21922099289.426056, 554560360.8461227, -194222619385.19327, 707877663216.3689, -1307020269483.416, 936900160544.3005, 1853477200572.1023, -7290678660767.163, 13151336918492.885, -16020198783445.686, 14291740129705.23, -9540812392509.43, 4744580775722.048, -1713311264351.8594, 425781033972.30786, -65261767934.93874, 4657278153.102439,),
    (16, 5): (504.5034616993073, -14470.000966367068, -106617.0408644837, 6079400.818743409, -61769157.40947388, 152163310.38209844, 1593259447.251157, -14839731887.139633, 48217029333.06927, -2989857076.9428926, -540884506939.4381, 2040533363613.779, -3089794781494.4595, -1823216465409.7966, 18630395569784.74, -40844671345588.125, 42028363677352.25, 4536038475539.644, -89673966675255.31, 163177532189847.78, -178242477538439.5, 135418973218759.25, -73869207062430.86, 28629500203589.57, -7528423726975.095, 1208967193992.425, -89738842734.35637,),
    (15, 6): (-4521.845841897495, 112467.77156947184, 1325477.3857533655, -50442522.06172068, 395093231.6878163, 93164462.15705906, -17733438409.93659, 100367999843.02655, -132717325370.54872, -949924432556.8422, 5134833308657.496, -8929882185401.162, -8864356356590.719, 74737111863741.48, -148780517541746.53, 69441389068365.664, 301877286963985.75, -776464084982931.0, 828589156060358.1, -137716766950220.45, -918247443363839.2, 1575347065409258.8, -1473790429940582.2, 914732435695691.9, -388412362101495.1, 109486671405335.16, -18584577915836.1, 1444039511147.4243,),
    (14, 7): (37217.14028964334, -809912.9453750136, -13127051.313236658, 380638134.7203013, -2218076434.8317633, -8221068529.497197, 144378495545.01276, -520623258429.58844, -609540525122.0459, 10241607216430.37, -28222636236671.977, -5460586571000.024, 217034441559300.34, -515507139998962.4, 171697074192995.62, 1618042351215325.0, -3726469040539767.5, 2558695494102825.5, 3767000619877085.0, -1.0667708464404562e+16, 1.0402222026621146e+16, -1560176015490974.2, -8450485982739674.0, 1.2045176732003028e+16, -9062886637358382.0, 4337633627258597.5, -1331255266234222.0, 241166418236088.62, -19742765014021.594,),
    (13, 8): (-281812.4805585975, 5389786.369027919, 112087854.06532003, -2623010316.4106026, 10491840085.524467, 96315980597.17667, -968349115740.8624, 1845485977335.122, 12120382304690.566, -70449612203783.52, 78513659808060.78, 423365274898197.2, -1635179301801623.8, 1242367538792709.0, 5291692993035641.0, -1.5173338566063562e+16, 9636439751558666.0, 2.586027499776281e+16, -6.253362387072097e+16, 4.130740003883971e+16, 4.441454942551913e+16, -1.1338402442347533e+17, 8.949909466149507e+16, 247074912160875.22, -6.74004571853139e+16, 7.102360660319022e+16, -4.006080749170778e+16, 1.3658522638386004e+16, -2669974628788248.5, 231850763455623.16,),
    (12, 9): (1960684.239738242, -32997596.340430543, -848192048.9603891, 16494857455.653395, -37280919414.9262, -801828399645.6389, 5504897654389.279, -924109064891.8468, -107220654267954.05, 352558604705243.9, 265060391702707.16, -3915037615665954.0, 6909794704323601.0, 9346761528343184.0, -5.201763327573646e+16, 5.240410930317703e+16, 9.416797168500442e+16, -2.936783731120494e+17, 1.8561788224626218e+17, 3.566949600852423e+17, -7.666439436118586e+17, 3.841107461773183e+17, 5.085869790719306e+17, -9.309337474296846e+17, 5.096530778771769e+17, 1.519110747469768e+17, -4.217159964247873e+17, 3.046675893492126e+17, -1.1869653973699506e+17, 2.537027908456441e+16, -2354110289793961.5,),
    (11, 10): (-12490711.950803036, 184729868.16117173, 5746100754.57365, -94301075188.25339, 50895300935.17166, 5481826725301.432, -26393237811023.29, -51642145800007.92, 694981767343066.1, -1180395796566366.8, -5216576855498634.0, 2.2737612480695292e+16, -6921744685701220.0, -1.273630756284338e+17, 2.521789816680459e+17, 1.452419894785825e+17, -1.1127562828117663e+18, 1.0760234481932973e+18, 1.4708586173460782e+18, -4.090422571432134e+18, 1.9020564178887473e+18, 4.363670210409175e+18, -6.917308285422447e+18, 1.7589896462335724e+18, 4.86342557534608e+18, -5.595136292707056e+18, 1.5498954247559754e+18, 1.640869984354893e+18, -1.87638894163185e+18, 8.727886413915629e+17, -2.0739750207669866e+17, 2.0732728778423e+16,),
    (10, 11): (72478999.60926498, -938404845.6837924, -34922082291.36753, 487077948497.638, 595970571810.9064, -32071033217259.047, 102884214481353.31, 533590412051281.7, -3583858967359578.0, 879976784235809.9, 4.053423330740502e+16, -8.936113062613134e+16, -1.488032152567287e+17, 8.088517987560113e+17, -4.5059536795751514e+17, -2.9123193095237796e+18, 5.463650442699271e+18, 2.4842895225425454e+18, -1.7410647371348509e+19, 1.2977993484866548e+19, 2.079062746681855e+19, -4.141692747128311e+19, 7.933603672541956e+18, 4.321986395790682e+19, -4.346673148151817e+19, -3.319252895243446e+18, 3.37024789320285e+19, -2.210029133481042e+19, -9.870082293197819e+17, 8.979248205016738e+18, -5.396131054456782e+18, 1.4574640253624622e+18, -1.584384491731304e+17,),
    (9, 12): (-380370940.4097339, 4284048557.60165, 189886057537.10876, -2253405766471.4277, -6979303725185.268, 162551762232361.25, -290959744101586.9, -3568161829001957.5, 1.4799537023774514e+16, 2.1784499337231828e+16, -2.1978955566434582e+17, 1.7909386341605322e+17, 1.4263879901243487e+18, -3.2353633880527196e+18, -3.298992451916549e+18, 1.8685569389977068e+19, -8.973577952797763e+18, -5.1100225538307015e+19, 7.654062837038337e+19, 4.924074610816145e+19, -2.0091914073871647e+20, 8.332842097888875e+19, 2.3723369619302973e+20, -2.891322168134925e+20, -5.321505466582242e+19, 3.098635753480125e+20, -1.6295555722074394e+20, -1.0336627098505988e+20, 1.5276937095078078e+20, -4.314911739336193e+19, -2.969451818714333e+19, 2.768153362985711e+19, -8.770285033173875e+18, 1.0482086739912046e+18,),
    (8, 13): (1788951956.3584893, -17364445646.638493, -917865260920.7169, 9231545929100.148, 47696200494069.85, -713456723342227.6, 304348231656446.94, 1.8568406535297624e+16, -4.675360207259998e+16, -1.9510020607070275e+17, 8.982706318227432e+17, 5.1014427619028736e+17, -7.827929127625412e+18, 6.645488018956397e+18, 3.514713212786808e+19, -6.896650821196177e+19, -6.872582874100215e+19, 2.969826877736831e+20, -6.392251387876537e+19, -6.862719876092038e+20, 6.75791193049761e+20, 7.730756768022457e+20, -1.6290410291233887e+21, 1.8972348594853433e+19, 1.9325660809717505e+21, -1.195805324534477e+21, -9.945757432649039e+20, 1.4413999553492172e+21, -1.5203033641663172e+20, -6.650355188362464e+20, 3.92642132893882e+20, 3.383489088671227e+19, -1.1492816822048906e+20, 4.486201535610067e+19, -5.973490252554075e+18,),
    (7, 14): (-7452262721.059078, 61526632600.64526, 3905353830942.3877, -32989559988011.06, -249196198555917.6, 2688422736875875.0, 2640348783640417.5, -7.85578995465532e+16, 9.444210327824443e+16, 1.0576012834429018e+18, -2.7055845092321946e+18, -6.812710390087598e+18, 2.996090659237108e+19, 1.2632767693556873e+19, -1.8089566123387686e+20, 1.0928733434950063e+20, 6.381008334187491e+20, -8.990312413295388e+20, -1.2266606151535084e+21, 3.210249910253362e+21, 5.818131932698555e+20, -6.63482862829208e+21, 3.049027332925561e+21, 7.998131272506033e+21, -8.297332685013242e+21, -4.4563647173406244e+21, 1.0127242548478264e+22, -1.2569726070218458e+21, -6.427403419806513e+21, 3.5910824542630146e+21, 1.5726982473434905e+21, -2.0648581706188063e+21, 3.2890550070709394e+20, 3.674260647068739e+20, -1.928540444152536e+20, 2.908318258451833e+19,),
    (6, 15): (27081154715.35481, -186713592269.26556, -14423951262643.465, 100791417033393.58, 1053462693155232.6, -8558710456844860.0, -2.1769870226603348e+16, 2.7173737274963382e+17, 1.0090072530984174e+16, -4.2411894945584666e+18, 5.125547656328398e+18, 3.6500210306746327e+19, -7.888021778387154e+19, -1.755019729890608e+20, 6.020912971250806e+20, 3.788106688192563e+20, -2.7874607289863944e+21, 5.577114153301551e+20, 8.283626894158415e+21, -6.52834091163207e+21, -1.5657025202441e+22, 2.18200981634071e+22, 1.665765692829352e+22, -4.207674523010878e+22, -2.937758629022993e+21, 5.094734890526152e+22, -1.8722625405888563e+22, -3.7420008177755675e+22, 2.8912614664895245e+22, 1.3350028467462834e+22, -2.06596719645288e+22, 1.147071948303719e+21, 7.298130632545412e+21, -2.7180234646342635e+21, -7.963008467397263e+20, 6.850287477086987e+20, -1.1951318780340342e+20,),
    (5, 16): (-84132509746.08612, 471865687857.77075, 45360318632826.625, -256069703733337.38, -3636264350462869.5, 2.244928465213616e+16, 9.90971791504676e+16, -7.577003199426019e+17, -1.0295995915310687e+18, 1.304892228949823e+19, -4.2882586992169984e+17, -1.3118336679507337e+20, 1.1255671731592066e+20, 8.242766637973271e+20, -1.236777634942055e+21, -3.3068361634454857e+21, 7.289926610046775e+21, 8.089409457137158e+21, -2.7633652331928042e+22, -8.754782143900865e+21, 7.139701123359156e+22, -1.3230441670265608e+22, -1.2762979644842988e+23, 7.311103471766361e+22, 1.5482603762975395e+23, -1.4858073413435592e+23, -1.174052748303262e+23, 1.8126750430040664e+23, 3.843174481583488e+22, -1.4104917382083938e+23, 1.8815665022744117e+22, 6.72110106326746e+22, -2.679015288507653e+22, -1.6436910997319065e+22, 1.178500997371646e+22, 5.67184575983414e+20, -1.9609350028610893e+21, 4.073285834328824e+20,),
    (4, 17): (217315709472.2196, -953462676060.2821, -118206316266169.97, 519504148112152.06, 1.01144927315972e+16, -4.667559264691973e+16, -3.21158295402574e+17, 1.648643270962662e+18, 4.871705789001862e+18, -3.041867459710124e+19, -3.695416349273745e+19, 3.373453329986887e+20, 9.079394727458683e+19, -2.4362254768277894e+21, 8.048508622477547e+20, 1.2012754203870304e+22, -9.263937673064031e+21, -4.146651396601115e+22, 4.795402152650848e+22, 1.0061025879383594e+23, -1.585646082072249e+23, -1.6703573482501812e+23, 3.6501052972775546e+23, 1.700654775593917e+23, -6.026730715486536e+23, -5.063933565158679e+22, 7.166797358281803e+23, -1.3936440313841232e+23, -6.033939953443427e+23, 2.5651016810937132e+23, 3.4306358345310915e+23, -2.254487755500857e+23, -1.1707288124670028e+23, 1.1654575095998329e+23, 1.5018602693865912e+22, -3.4016682251575292e+22, 3.501222351401747e+21, 4.3547320894203977e+21, -1.1224527518488119e+21,),
    (3, 18): (-448167919366.10944, 1444230326655.9778, 245238359843854.9, -789215204945861.0, -2.1952944744512636e+16, 7.223053216992798e+16, 7.64894676884836e+17, -2.638336371330789e+18, -1.3715242443234834e+19, 5.113038674983039e+19, 1.4415048089890413e+20, -6.058800801727271e+20, -9.411234759731382e+20, 4.770110633052912e+21, 3.7807320237243614e+21, -2.6298121205976993e+22, -7.69463150465243e+21, 1.0504945690936262e+23, -6.455338604258979e+21, -3.106439517989506e+23, 1.0267598778508011e+23, 6.879203132072685e+23, -3.793704512921659e+23, -1.143395559662903e+24, 8.587854411388269e+23, 1.414344191296556e+24, -1.351998683084636e+24, -1.2704081253344495e+24, 1.5330243962474667e+24, 7.82316709579781e+23, -1.2544996085379164e+24, -2.806023582895115e+23, 7.252111798295803e+23, 1.435700758281079e+22, -2.8154893814824018e+23, 3.7152655114976335e+22, 6.595042641378693e+22, -1.6411503163416898e+22, -7.05056721560468e+21, 2.406491718437437e+21,),
    (2, 19): (691964528134.0645, -1457776968487.5647, -379976639594007.06, 798199253707085.8, 3.5041476762189656e+16, -7.403654137179712e+16, -1.2927334639032182e+18, 2.770258081777484e+18, 2.5348333144329306e+19, -5.5578576898638135e+19, -3.042093299259247e+20, 6.891836473811734e+20, 2.4250740361424824e+21, -5.743568566323336e+21, -1.3507694404645937e+22, 3.3946857240671975e+22, 5.421479479567117e+22, -1.4751438075104546e+23, -1.5922651022208086e+23, 4.829077688074394e+23, 3.419209642930147e+23, -1.2100459727399373e+24, -5.2277109028679526e+23, 2.3422709044847597e+24, 5.173620636891212e+23, -3.5136500996208853e+24, -1.949355114173796e+23, 4.0731901449499966e+24, -3.124125848135199e+23, -3.6134123182252757e+24, 6.653785283839483e+23, 2.4069874147840152e+24, -6.565405415173587e+23, -1.1649684916756864e+24, 4.040157743155019e+23, 3.8671844948338206e+23, -1.5830604498802095e+23, -7.873651311843005e+22, 3.643402531589463e+22, 7.413502858553479e+21, -3.7711281114397677e+21,),
    (1, 20): (-711133815737.7784, 735446082942.4888, 391026133827987.3, -403150975186994.7, -3.6690841236638984e+16, 3.773171616533796e+16, 1.398428568990239e+18, -1.4349887930161275e+18, -2.8769733110619447e+19, 2.94671811860284e+19, 3.682691793538934e+20, -3.7659164668392486e+20, -3.1899338634040265e+21, 3.2574456912009374e+21, 1.973751035248281e+22, -2.013029662815411e+22, -9.048811957060649e+22, 9.218742698038315e+22, 3.1522184314156316e+23, -3.208257870196354e+23, -8.487528851947073e+23, 8.630778284047447e+23, 1.7855517359451871e+24, -1.8142352979684028e+24, -2.950892814684069e+24, 2.9961172256370817e+24, 3.8325663512883665e+24, -3.888721169622262e+24, -3.8923072275816865e+24, 3.946936100951254e+24, 3.055737119927785e+24, -3.0968918286136814e+24, -1.8171444596102557e+24, 1.8406673652362785e+24, 7.911442787711984e+23, -8.010027744568207e+23, -2.378339325970369e+23, 2.4069079665225657e+23, 4.411367763619177e+22, -4.462514056530704e+22, -3.804005535294798e+21, 3.8466274460544034e+21,),
    (0, 21): (364901081884.98334, 0.0, -200524401236271.12, 0.0, 1.894406984252143e+16, 0.0, -7.319501491566134e+17, 0.0, 1.5365025218443373e+19, 0.0, -2.0197335419300872e+20, 0.0, 1.8081594057131945e+21, 0.0, -1.1640246461465369e+22, 0.0, 5.591591380366263e+22, 0.0, -2.0566149136271542e+23, 0.0, 5.8965434619782445e+23, 0.0, -1.3337178907798302e+24, 0.0, 2.3967237744351682e+24, 0.0, -3.430872898515746e+24, 0.0, 3.905264103536985e+24, 0.0, -3.511096528332644e+24, 0.0, 2.461506085403875e+24, 0.0, -1.3170969618092387e+24, 0.0, 5.194289094766812e+23, 0.0, -1.4228394823321413e+23, 0.0, 2.417461500896379e+22, 0.0, -1.91862023880665e+21,),
    (22, 0): (-0.002781492528356466, 0.14315199220925462, -1.5271686887959002, -21.204477473912362, 702.4539863408871, -8609.572218510393, 64987.72261113055, -344255.0375450175, 1360627.2059964351, -4157086.1935792794, 10039667.371173298, -19442014.407014325, 30452391.632408462, -38742042.15653659, 40040925.296017475, -33488996.318035346, 22474220.626021914, -11928918.84385914, 4895149.994985447, -1497994.2884535014, 321829.05176201474, -43309.115625775754, 2747.1691806274143,),
    (21, 1): (-0.015298208905960564, 1.4647578688558902, -30.55820653838674, -23.261789214430497, 9146.8802058002, -160785.0011627963, 1558294.8817580817, -10204911.488662045, 48939399.99737703, -179531293.85149035, 517560721.0656137, -1193253942.5439017, 2225172208.5115466, -3378674990.2489424, 4188791572.995981, -4236633442.4293084, 3479535548.0232744, -2299527504.5269365, 1204811932.1522245, -489008309.74868345, 148262075.3771949, -31604305.115358263, 4225180.50957088, -266543.0697653716,),
    (20, 2): (0.36142018540331833, -20.291794895661845, 201.70692049827474, 4864.030868977555, -141307.54162668408, 1611775.3639942687, -10374043.183038527, 37376581.240331456, -30922000.822443303, -471864441.41754854, 3239961222.54061, -12413661616.326675, 33867738422.22784, -70678471873.91, 116369706632.84666, -153399847535.93912, 162829348749.27432, -139077716815.15213, 94960018041.16373, -51151338847.18565, 21264863308.832485, -6584405384.055334, 1430098972.9041374, -194440564.83166605, 12455678.163711896,),
    (19, 3): (-5.01972479726831, 218.52090488762923, -728.8357950444378, -75255.10258724107, 1438548.1185734689, -11781957.87268284, 42034480.17354145, 67777456.27170771, -1540199427.5321283, 8411431778.525206, -25692488739.5398, 40750643402.044945, 19657230525.582848, -317655536562.0975, 1027038475594.5244, -2126316932137.679, 3244355560282.0825, -3818694200813.9463, 3525461136525.389, -2558915575646.1665, 1448577874129.9846, -627646692638.5563, 201300535595.33682, -45071535083.089386, 6293710049.54486, -412829590.66237396,),
    (18, 4): (58.41704732820996, -2112.3060801768693, -4091.928603325564, 863067.3951752179, -12467171.279993491, 69999370.85175326, 6086609.260436721, -2479712865.353685, 16121150329.407688, -48208487800.69146, 30654785579.38142, 340621868182.7496, -1577532525622.9856, 3560935785302.67, -3947566317564.4053, -2064135657048.9067, 18031214874145.176, -40554949342951.79, 58693046104970.24, -61968734310441.61, 49531232467410.75, -30182727979033.676, 13868662288431.021, -4667990909803.982, 1088520835574.5376, -157391741362.8593, 10642348839.915653,),
    (17, 5): (-608.3718214609295, 18842.463438046758, 124896.80327088528, -8527354.329348395, 96401047.07409567, -306460288.5212649, -2282428685.5329237, 26184371926.770214, -101949742938.0496, 76435728818.59987, 965719346109.0758, -4638891682469.38, 9256627722765.621, -1650050490237.7715, -41009400282321.61, 119003871406010.83, -166421454879313.9, 70722453836875.56, 212143090508371.22, -561740084886809.4, 766057032471910.9, -713613058387399.5, 483371472750614.0, -240399095031151.78, 86118492135698.81, -21129429898924.664, 3188099985512.274, -223564110897.30472,),
    (16, 6): (5793.614984931166, -156256.08342706607, -1730563.8127910695, 75724247.47781831, -670156994.5446705, 384355036.5471268, 29498821277.9197, -198417832507.1958, 388906167523.6809, 1541995267395.2405, -11342820864411.178, 26286387252589.008, 2341690767213.7085, -172589666640200.62, 460917686797123.56, -441797985073325.25, -550473441500075.4, 2440695951422371.5, -3636586714159049.0, 2142382484886334.2, 2017868469879029.0, -6197632909600486.0, 7631437295875194.0, -6053171519180042.0, 3349277368197551.0, -1298457275537826.5, 338933950239517.06, -53785010950017.445, 3934287723557.7324,),
    (15, 7): (-50863.42506251257, 1205799.9521914802, 18665895.164537635, -613688055.5659524, 4149348665.985563, 10771515161.514395, -267440438627.4447, 1180830197610.7695, 309366618797.8811, -21175184675667.348, 75381523968799.17, -39898066919720.125, -480624497676737.8, 1574366484923572.8, -1432331469866685.0, -3474208641165683.5, 1.253613669587651e+16, -1.4620218357293512e+16, -3863349698602581.5, 3.690675549489445e+16, -5.3715402683834776e+16, 2.997172041850446e+16, 2.0011062979188228e+16, -5.690055848552135e+16, 5.897292070421525e+16, -3.788762084931878e+16, 1.6245628801157334e+16, -4569911985965732.0, 769118291754553.6, -59028557016310.64,),
    (14, 8): (412653.98938937485, -8642250.771153847, -172812721.2151895, 4562504849.638603, -22269179844.030273, -159100795104.04962, 1989354995642.7476, -5262753769287.959, -21429395051322.113, 170609349228232.9, -304619202817410.56, -798527406809852.5, 4657700270618340.0, -6411597368818566.0, -1.0346370016239842e+16, 5.034999306551695e+16, -6.019830716966809e+16, -4.636022294779442e+16, 2.3542552318676666e+17, -2.7422083765903498e+17, -2.155793724040175e+16, 4.544837626295996e+17, -5.814964713705597e+17, 2.4991390499581344e+17, 2.1510802738610218e+17, -4.292742844373451e+17, 3.470925451890149e+17, -1.6986716737043958e+17, 5.2322604966324296e+16, -9427184227343616.0, 763735160625721.0,),
    (13, 9): (-3091848.2242026124, 57320698.46672333, 1419444550.9655893, -31126913067.155117, 96913210860.88884, 1509903146109.2686, -12634574976960.12, 12057710764001.738, 233320131950383.66, -1012790159237558.4, 103461813769849.3, 1.0053597866714996e+16, -2.5919417509540012e+16, -8324747499788132.0, 1.601231076403534e+17, -2.6967863695397325e+17, -1.3309161640954557e+17, 1.0907677860971286e+18, -1.3307514164510157e+18, -5.768472377692232e+17, 3.3919841669707796e+18, -3.4391790623471084e+18, -5.2619079228197504e+17, 4.661820811274615e+18, -4.644001025605392e+18, 1.0933304557544794e+18, 2.0055857838022671e+18, -2.523138142254527e+18, 1.484347504444812e+18, -5.113496133683563e+17, 9.971629117395149e+16, -8582788660044011.0,),
    (12, 10): (21338299.582621854, -350066569.99002916, -10477151944.404188, 194359243282.7242, -270337687496.17075, -11555415861187.58, 68839527452382.07, 65432444839896.6, -1758487405554779.8, 4408172984995498.5, 1.0607504936449758e+16, -7.185007227552947e+16, 7.35687057808639e+16, 3.384003524772807e+17, -1.0531032358480044e+18, 2.3999389522978797e+17, 3.783580045298931e+18, -6.502011098915341e+18, -1.5982277866285512e+18, 1.7860198956227688e+19, -1.8966435941881545e+19, -9.109480554674391e+18, 3.861258516212291e+19, -2.930188310586811e+19, -1.2072266072808071e+19, 3.814627658162604e+19, -2.5934978617798197e+19, -8.520549818196175e+17, 1.370341595431119e+19, -1.0749914387398793e+19, 4.269999097079035e+18, -9.133056890199693e+17, 8.411297449439902e+16,),
    (11, 11): (-135074499.27181202, 1956051920.927215, 69772250626.2386, -1105388335993.003, -380956281539.273, 75560006563339.53, -315840542346333.56, -1106945239131923.4, 1.0511850248535572e+16, -1.0909022911841854e+16, -1.1023152877897491e+17, 3.5986090123395866e+17, 2.0267509636475635e+17, -2.8720107861527455e+18, 3.704212739596455e+18, 8.085298231250392e+18, -2.6905106893965025e+19, 8.470666443629328e+18, 6.888773801947938e+19, -1.0374220432289797e+20, -3.283513751448936e+19, 2.2827696880282406e+20, -1.7773024161928453e+20, -1.421148051407897e+20, 3.371884722268719e+20, -1.5235793574107182e+20, -1.555318786624155e+20, 2.303529368828298e+20, -8.607770802561185e+19, -4.4559038119916085e+19, 6.3152400416525976e+19, -3.0370348955930186e+19, 7.247038790858533e+18, -7.198754269712036e+17,),
    (10, 12): (779760427.8399545, -9921492209.139519, -418826700363.626, 5687119270147.54, 12234110930326.51, -430274635175230.7, 1153814463938695.0, 9099678063755870.0, -5.128384902878857e+16, -2.507052760696437e+16, 7.303062472642624e+17, -1.1897251160689413e+18, -4.109335506970972e+18, 1.5181652294748285e+19, 1.2186571472065725e+18, -7.704320874908679e+19, 9.51709856863448e+19, 1.6082546800729863e+20, -4.7557180137935883e+20, 8.382074885287187e+19, 9.980016173192329e+20, -1.1165814183952954e+21, -6.807695403268072e+20, 2.2152790918004906e+21, -9.581961980223062e+20, -1.6357652602680252e+21, 2.1004784787139823e+21, -2.3092402061963385e+20, -1.209652115012449e+21, 9.21090515589323e+20, -5.405772948193559e+19, -2.8604376020044418e+20, 1.8251019125248855e+20, -4.97123455193409e+19, 5.375259351952693e+18,),
    (9, 13): (-4074835011.7054477, 45238085056.06261, 2256332959219.2197, -26231154112962.535, -107453176003219.47, 2142419020128006.5, -2782297164069770.5, -5.590300783475454e+16, 2.0122005457002342e+17, 5.006014314244294e+17, -3.645839004902578e+18, 1.0814450932283537e+18, 2.9956695772674687e+19, -5.14490363931586e+19, -1.1135245987865965e+20, 3.9975773829783087e+20, 2.0683569786703036e+19, -1.5025292119012941e+21, 1.4504858659505745e+21, 2.7524571575216756e+21, -5.913245907496737e+21, -6.638265137268792e+20, 1.1100470859364538e+22, -7.447297804038782e+21, -9.471126688367055e+21, 1.5201032401712688e+22, -6.553959997948251e+20, -1.2541031600168056e+22, 8.124861377968723e+21, 2.871871455965061e+21, -5.721774751764943e+21, 1.9266297463381437e+21, 8.57168271447226e+20, -9.12872998128149e+20, 2.9335015277235264e+20, -3.490307454116082e+19,),
    (8, 14): (19096423222.713886, -183172930912.28204, -10829180057979.309, 107205692352443.16, 672129724621723.9, -9288134660505394.0, -663169323333434.0, 2.7832444027722333e+17, -5.921071153842154e+17, -3.581247443452658e+18, 1.401961347050456e+19, 1.701854959611864e+19, -1.4727911565528886e+20, 6.31580087009146e+19, 8.307488362713708e+20, -1.2307541040637063e+21, -2.447804582312334e+21, 7.004125452705752e+21, 1.8632787718722478e+21, -2.152091873424382e+22, 1.2283198696580853e+22, 3.7259420283674953e+22, -4.9329081985125224e+22, -2.7898828003333466e+22, 8.809215588765844e+22, -1.9173736938653427e+22, -8.335203778102717e+22, 6.433521975945625e+22, 3.1763411383203133e+22, -5.992182224033679e+22, 1.157713049020777e+22, 2.291242605280705e+22, -1.5040970635852193e+22, -3.65127204570233e+20, 3.69811263893625e+21, -1.4770998933940832e+21, 1.9594100650651455e+20,),
    (7, 15): (-79309095952.11052, 648454849124.2097, 45819592323781.375, -382379553715907.75, -3365437620598015.0, 3.469094464603219e+16, 5.267325397250185e+16, -1.1463347213082316e+18, 9.803426296515798e+17, 1.7914233235217543e+19, -3.948059598162941e+19, -1.4281749116909501e+20, 5.241990580381552e+20, 4.87488960955492e+20, -3.777095881682093e+21, 9.405689951558048e+20, 1.6391295900688952e+22, -1.703110037172152e+22, -4.267858813829961e+22, 8.093488572687718e+22, 5.492726885895525e+22, -2.1718053274619412e+23, 2.430258633014126e+22, 3.596807257602893e+23, -2.3523521761601632e+23, -3.493785099933748e+23, 4.463629029031969e+23, 1.3299569267339368e+23, -4.4751285976863924e+23, 1.0064750951712718e+23, 2.4105855966385624e+23, -1.5372274498834713e+23, -4.6520487553321685e+22, 7.418126015334851e+22, -1.4074528120518964e+22, -1.148660374438508e+22, 6.270463894754634e+21, -9.426732910409474e+20,),
    (6, 16): (287452741632.4609, -1966342696084.1755, -168478563151659.44, 1166476370139399.2, 1.3882737695758556e+16, -1.0972462542526786e+17, -3.456062049489316e+17, 3.895839069733185e+18, 1.531512799586779e+18, -6.889626001768856e+19, 6.436357282520422e+19, 6.866467457557127e+20, -1.2784337609607545e+21, -4.010163882358557e+21, 1.1587700859625779e+22, 1.2646659828792546e+22, -6.340592203771242e+22, -7.348497575210939e+21, 2.266381928584714e+23, -1.1536252252371012e+23, -5.3826184050684506e+23, 5.6226145894934884e+23, 8.147455071131249e+23, -1.4140831349944452e+24, -6.299552841288495e+23, 2.2507330548254937e+24, -1.931569659886284e+23, -2.3265370478024477e+24, 1.0955031526650692e+24, 1.4683995847343706e+24, -1.299548587156615e+24, -4.2164301429827085e+23, 8.005973065792179e+23, -8.352975768753363e+22, -2.5099259751566618e+23, 9.990569594733754e+22, 2.362436405368553e+22, -2.2053858579445988e+22, 3.837849065503846e+21,),
    (5, 17): (-890994408836.1003, 4966013456674.962, 527939682442326.2, -2959845521406848.5, -4.718076531816327e+16, 2.8641535710606784e+17, 1.4696743066152852e+18, -1.0731526489823967e+19, -1.890011879272427e+19, 2.0665749404952678e+20, 4.9648365001426715e+19, -2.3462999256695937e+21, 1.4938471744272746e+21, 1.6902706514176168e+22, -2.157663634390433e+22, -7.984244520301555e+22, 1.5143426079693686e+23, 2.4454767310791614e+23, -6.751101848224486e+23, -4.31634218853565e+23, 2.0667158802392315e+24, 1.2205543175067128e+23, -4.4682854209546196e+24, 1.5768592354052185e+24, 6.822449787107063e+24, -4.8266524720702975e+24, -7.120267598218534e+24, 7.898203956334321e+24, 4.547382056879456e+24, -8.315774372185833e+24, -9.586620281892866e+23, 5.743492542960728e+24, -1.0638330189995083e+24, -2.461453492379448e+24, 1.0683496339149541e+24, 5.394069819539959e+23, -4.127745938926878e+23, -1.0973791871967187e+22, 6.265184429403806e+22, -1.298764521718306e+22,),
    (4, 18): (2296860586751.311, -10028383903257.65, -1371806369117727.8, 5998696433183631.0, 1.2988250620579534e+17, -5.933502203144835e+17, -4.61227405488473e+18, 2.315027975051702e+19, 7.977876584193806e+19, -4.738005244160565e+20, -7.258968774415109e+20, 5.859811229862801e+21, 2.9211144880445603e+21, -4.752673242786585e+22, 6.978074469168905e+21, 2.6572702572975323e+23, -1.6117145348645928e+23, -1.0545104714239691e+24, 1.0389017527686334e+24, 3.006138431624628e+24, -4.083247204540983e+24, -6.105954250159965e+24, 1.1114759895697357e+25, 8.433953674317496e+24, -2.1899721069102882e+25, -6.602478202853534e+24, 3.1695244254391813e+25, -5.2352651860943455e+23, -3.3575242827170054e+25, 8.785016306303965e+24, 2.5458520924325993e+25, -1.2125617000804702e+25, -1.310960710584929e+25, 9.268687146620419e+24, 4.027289022087414e+24, -4.32917655867924e+24, -4.191009231922554e+23, 1.1622068467590449e+24, -1.3147702019243781e+23, -1.3834827002419816e+23, 3.560316718255268e+22,),
    (3, 19): (-4728424275582.773, 15181931922572.188, 2839367005489779.0, -9105419270230738.0, -2.7991434028769536e+17, 9.157387552694637e+17, 1.0789397229766058e+19, -3.6821914972212924e+19, -2.1540003809990204e+20, 7.874917461109122e+20, 2.545991388702931e+21, -1.0331030473643527e+22, -1.903196141754096e+22, 9.042184356736843e+22, 9.1176639237605e+22, -5.571161786898417e+23, -2.577680864423445e+23, 2.5038286707206474e+24, 1.98899877470274e+23, -8.402521308480271e+24, 1.7441414699879662e+24, 2.135670779402055e+25, -9.33730092502928e+24, -4.137179406195149e+25, 2.629656423374557e+25, 6.0968072690885765e+25, -5.028007945041242e+25, -6.751655068321195e+25, 6.955528234316582e+25, 5.457190935211995e+25, -7.083240851576699e+25, -3.011917554956112e+25, 5.281616439843174e+25, 9.284962641702731e+24, -2.811803340159172e+25, 1.8599563233496075e+23, 1.0136725859056322e+25, -1.472600746166271e+24, -2.2197770494110085e+24, 5.634976451566307e+23, 2.23103465307878e+23, -7.605828845369363e+22,),
    (2, 20): (7289121611312.229, -15316728338967.535, -4391013359803801.0, 9202754591486584.0, 4.4465757895773594e+17, -9.367874358290803e+17, -1.8041723799074324e+19, 3.849791589926069e+19, 3.8999538943818387e+20, -8.494917558481087e+20, -5.176494745115666e+21, 1.1609841925393926e+22, 4.584164803165213e+22, -1.0693873523030642e+23, -2.8536130465186293e+23, 7.0112350207327e+23, 1.290707635386168e+24, -3.3952162047337423e+24, -4.3240000444786946e+24, 1.2457567240954575e+25, 1.0796998671728581e+25, -3.523936029669165e+25, -1.988906939943515e+25, 7.770376952089175e+25, 2.589298454941111e+25, -1.3431650053044729e+26, -2.0442379212358655e+25, 1.8211007585682306e+26, 1.3785227271956356e+24, -1.9273066524783424e+26, 2.1191681309972967e+25, 1.5741676072355257e+26, -3.2564500719192516e+25, -9.724369185797797e+25, 2.7987908559896846e+25, 4.391959827944783e+25, -1.564334039902709e+25, -1.3678665096391744e+25, 5.669888537673745e+24, 2.625339215148665e+24, -1.2200069097135277e+24, -2.339942900702346e+23, 1.1892845036641195e+23,),
    (1, 21): (-7480472178642.159, 7723739566565.481, 4511799027816100.0, -4645481961973614.0, -4.641297111417751e+17, 4.7675909103678944e+17, 1.9396678952650252e+19, -1.988464571875466e+19, -4.3790321872563615e+20, 4.4814656887126504e+20, 6.160187302886767e+21, -6.294836205682106e+21, -5.876518068567882e+22, 5.9970620289487615e+22, 4.0158850292055525e+23, -4.093486672281988e+23, -2.040930853833686e+24, 2.0782081297027944e+24, 7.917967417464545e+24, -8.055075078373021e+24, -2.388100102101189e+25, 2.427410391847711e+25, 5.6683010358142786e+25, -5.757215561866267e+25, -1.0665420796236499e+26, 1.0825202381198843e+26, 1.5953558978098217e+26, -1.618228383799927e+26, -1.8940530902154375e+26, 1.9200881842390174e+26, 1.7731037468079854e+26, -1.7965110569968695e+26, -1.2922906948370345e+26, 1.3087007354063936e+26, 7.1781784418603505e+25, -7.265984905980966e+25, -2.934773338543249e+25, 2.969401932508361e+25, 8.323610971643027e+24, -8.418466937131837e+24, -1.4625642080423092e+24, 1.478680618048285e+24, 1.1991376492541562e+23, -1.2119284508462005e+23,),
    (0, 22): (3833534661393.9443, 0.0, -2310915976132356.5, 0.0, 2.3920280120269997e+17, 0.0, -1.0121818379942089e+19, 0.0, 2.3275346258089414e+20, 0.0, -3.3544689122226785e+21, 0.0, 3.297557757461478e+22, 0.0, -2.336107524486965e+23, 0.0, 1.238524103792452e+24, 0.0, -5.0463598652544e+24, 0.0, 1.6103128541137314e+25, 0.0, -4.077501349206541e+25, 0.0, 8.26258535798955e+25, 0.0, -1.3459193994556415e+26, 0.0, 1.7635713272326644e+26, 0.0, -1.8526731041549917e+26, 0.0, 1.548092083577385e+26, 0.0, -1.0148048982766395e+26, 0.0, 5.103920268388802e+25, 0.0, -1.9006807535664433e+25, 0.0, 4.936185283790662e+24, 0.0, -7.980021228256559e+23, 0.0, 6.04547062746709e+22,),
    (23, 0): (0.0026000908417245228, -0.14286356447240375, 1.6928202146783604, 21.438537667014476, -806.638874938887, 10710.753114663861, -87272.00527419391, 499533.11768564803, -2138846.7532723774, 7104351.645389666, -18735523.257213324, 39831153.84632389, -68935797.83706157, 97668804.53558064, -113504873.10326853, 108039233.55045772, -83795646.02856816, 52457752.182739206, -26106545.673049312, 10089595.913445156, -2919319.462889296, 595074.4531869397, -76216.32108599137, 4614.09153977483,),
    (22, 1): (0.014950522339916006, -1.5141391460916358, 34.130924425424, -5.733617399489514, -10608.008330042101, 203056.81139268278, -2119593.5738469306, 14941377.625248224, -77268711.53800645, 306562045.4686144, -959405417.4790912, 2412221983.376006, -4932492771.417672, 8266403230.918149, -11401728242.51262, 12954878656.36073, -12098296734.214638, 9233058764.926397, -5701211290.093153, 2804325264.835855, -1073075673.8771347, 307867625.8462292, -62307276.54025892, 7932054.294687676, -477768.10667325294,),
    (21, 2): (-0.37002542791292115, 22.099207629324955, -246.09203187845483, -5463.662807657087, 176590.53279502902, -2185729.9259477817, 15379529.920856452, -62687378.75561785, 88119090.97911935, 646145239.0738136, -5454981516.788631, 23449439765.81386, -70806681733.41547, 163363038392.21906, -298395997613.09784, 439112534041.90607, -524878251555.2019, 510661945314.68726, -403168883523.95374, 256196975658.98322, -129173849674.76706, 50509556577.01953, -14772066880.510813, 3041550273.8814335, -393299549.9765543, 24030369.402238708,),
    (20, 3): (5.396204157063433, -250.83522272152186, 1080.0224594396343, 91387.60125370804, -1915377.5506547263, 17225181.200281613, -71517195.19057657, -45703903.85686226, 2354706963.395756, -14808654007.806892, 51676118129.455925, -101643121985.37758, 25177363736.188686, 576547166232.5043, -2303707119869.615, 5483340804696.75, -9501372430943.42, 12719016219239.7, -13461058368268.41, 11347698145968.3, -7602522557904.467, 4004750868677.8965, -1625035058409.6946, 490660769347.242, -103881077097.18596, 13768016290.960949, -859971723.2009996,),
    (19, 4): (-66.10350092402706, 2561.1648014442135, 2824.457685210412, -1117171.0519217022, 17709442.13789922, -112310869.69376153, 76889230.15497291, 3725599284.5981655, -28279078220.872707, 99298677216.56041, -118697783731.61143, -537804898937.259, 3292981252376.582, -8913863240094.424, 13077571631743.615, -2551126941617.513, -39097984732389.04, 113736925458899.31, -195029448177714.44, 240696175709189.0, -225966945846388.4, 164150059286693.72, -92162488399029.56, 39392477405831.16, -12422343534692.664, 2729337648233.8945, -373552518530.0915, 24001305926.397602,),
    (18, 5): (726.6663423005546, -24200.485209266455, -142205.65928126173, 11748948.658495456, -146744418.54042152, 570937591.8174573, 3090394643.130227, -44507739133.0416, 203445756926.24915, -276347685705.9492, -1575731391154.5234, 9864503299151.53, -24622181894689.41, 18401426668844.65, 78082436976406.84, -313157409558959.2, 561448526386500.0, -460323180090660.7, -330624477714785.75, 1680945503612436.0, -2899929681503271.5, 3271829860598007.0, -2684587814832562.5, 1647413028459214.8, -754348245568392.4, 251467468391716.44, -57857703202344.38, 8234858509740.937, -547303648370.1928,),
    (17, 6): (-7327.218951530592, 213287.12854451465, 2209990.9259394747, -111227250.89491564, 1100997570.087598, -1482138752.3270142, -47185915388.19494, 374593538300.22363, -967927575618.0236, -2170677437791.7637, 23463310242430.812, -68874090220350.85, 39992138878515.555, 354406661845260.9, -1274844398833217.5, 1808339379970184.5, 365882070177071.9, -6618245181931551.0, 1.3418877103092296e+16, -1.2711543881707656e+16, -326434813874029.44, 1.995369294307561e+16, -3.356262330766931e+16, 3.3559459424074684e+16, -2.3360046119458236e+16, 1.1708386828077582e+16, -4183577673579560.5, 1017709023960302.1, -151691838022564.6, 10484109245523.893,),
    (16, 7): (68347.72742775128, -1755899.9507551077, -25922436.544512615, 963796961.887936, -7439985445.711107, -12011195415.694626, 475385111631.3799, -2509649004928.6113, 1292566280741.8872, 40872525965732.555, -184315062022232.56, 213313116366655.22, 934089837517201.6, -4296087223402022.0, 6223482252171045.0, 5071879470742314.0, -3.652993251334157e+16, 6.170752133134852e+16, -2.226434423300144e+16, -1.0210916393701758e+17, 2.2418354781334746e+17, -2.063251102451997e+17, 1.8061049537702356e+16, 2.0800042828947424e+17, -3.124372214496653e+17, 2.6368243449975094e+17, -1.4919878624507478e+17, 5.813828670996776e+16, -1.5116462410706044e+16, 2377028907688199.5, -171750760005303.03,),
    (15, 8): (-591470.7181247706, 13485051.545446567, 259301239.81846634, -7691006471.700684, 44445935507.12123, 247542418163.40118, -3896590779900.9507, 13242889713991.9, 33234758031761.152, -384579416468832.2, 950338913952347.1, 1156467791152755.5, -1.1960091581506384e+16, 2.4124325297160944e+16, 1.117653577158306e+16, -1.4471889741400592e+17, 2.616483407745189e+17, -1.7686651397284302e+16, -7.285648182570703e+17, 1.3061426001360732e+18, -6.167206861701123e+17, -1.343074608402674e+18, 2.867847941515597e+18, -2.2902568845279096e+18, 2.883079354446944e+16, 1.9327201739190244e+18, -2.3274309563018394e+18, 1.5649213876462077e+18, -6.808243534656974e+17, 1.9168352300198906e+17, -3.2057508239944464e+16, 2434741236276233.0,),
    (14, 9): (4748195.487168297, -96324914.71854389, -2300991720.427485, 56586929224.22975, -224972760302.06915, -2700709672009.9854, 27372185941213.95, -46772881865486.92, -469645490431918.3, 2649035326969651.5, -2222617408092580.0, -2.3132657872936564e+16, 8.317668044681563e+16, -3.5782430799661596e+16, -4.248119929851746e+17, 1.0734343735631388e+18, -2.8550159560384938e+17, -3.327087521313434e+18, 6.506105447609736e+18, -1.7783685152337372e+18, -1.1595259918507014e+19, 1.971084132406975e+19, -7.999084649167654e+18, -1.6338588747484174e+19, 2.8819384047207125e+19, -1.7624808989906334e+19, -3.4387826125441275e+18, 1.5072475263631397e+19, -1.338750682478877e+19, 6.736647559066151e+18, -2.0880316664497165e+18, 3.7484679229796154e+17, -3.0097865479937576e+16,),
    (13, 10): (-35290264.69433614, 637295827.1728605, 18399089092.912003, -383223466073.7049, 858484198372.4192, 23079629138980.36, -166837944873816.84, -12020982132784.54, 4120590452840439.0, -1.396243227717916e+16, -1.6306150495222664e+16, 2.0307463322274147e+17, -3.5361173121205357e+17, -7.248600886348303e+17, 3.699865098198988e+18, -3.3153140650313267e+18, -1.0298109777085372e+19, 2.932443007187068e+19, -1.292284123669477e+19, -6.0158729198710006e+19, 1.1212418112110697e+20, -2.6382163142976217e+19, -1.5694851355924047e+20, 2.205938324521242e+20, -5.118914638454938e+19, -1.7595877969655634e+20, 2.223064998358833e+20, -8.546547710218802e+19, -5.519238222704028e+19, 9.071555713037487e+19, -5.612852341008792e+19, 1.958746711147012e+19, -3.8161178907784837e+18, 3.2596533388921126e+17,),
    (12, 11): (242008477.86199653, -3884623335.098378, -133340583670.24774, 2379998380498.341, -1229622950645.6914, -167600928157748.66, 875371079339377.8, 1970296791654192.2, -2.824321684561662e+16, 5.136506698505432e+16, 2.6398833088101178e+17, -1.2405977502171415e+18, 3.3116365093872736e+17, 8.780867356834096e+18, -1.8590813958194352e+19, -1.4456360275132348e+19, 1.0691111582332364e+20, -1.0528259530991473e+20, -2.0155958540213358e+20, 5.615608526572093e+20, -2.131237120906479e+20, -9.149726789958351e+20, 1.4011461147645494e+21, -7.641449511633153e+19, -1.773632403843317e+21, 1.7916887649343132e+21, 6.0762292221773095e+19, -1.5112186010091968e+21, 1.232831551227106e+21, -1.4739602898354338e+20, -4.4832388336044356e+20, 3.8920859211265737e+20, -1.5807663572039857e+20, 3.3877021132291154e+19, -3.099733327045724e+18,),
    (11, 12): (-1524077199.8690019, 21672994463.89851, 876357932192.0, -13480812047968.168, -16809623586399.45, 1062540338384537.8, -3834739939872945.5, -2.092827673148318e+16, 1.592558921550465e+17, -5.738911674675586e+16, -2.1559166889815982e+18, 5.453378815886696e+18, 9.254196871750814e+18, -5.926437783994076e+19, 4.042525659386216e+19, 2.5938251356038077e+20, -5.634844535038046e+20, -2.5935108210319485e+20, 2.2360134455367345e+21, -1.9119541907040654e+21, -3.4765079433436416e+21, 7.859956620772781e+21, -1.3726045023817525e+21, -1.1506060383478654e+22, 1.243137437890934e+22, 3.169752771379128e+21, -1.5621295846845026e+22, 9.614720111045113e+21, 4.48040228128598e+21, -9.39981474949926e+21, 4.272299582941188e+21, 1.1252236451878664e+21, -2.1879997082701123e+21, 1.0922987699541436e+21, -2.6202596328095138e+20, 2.5884028180081246e+19,),
    (10, 13): (8760895275.166712, -109793729281.22594, -5209116215035.792, 69139368978608.72, 214810720284367.75, -5930637916877010.0, 1.2906311685762172e+16, 1.5223788276165485e+17, -7.417453459423572e+17, -9.741438713345714e+17, 1.2910655762343215e+19, -1.42513361345523e+19, -9.708084002977954e+19, 2.7166783973522466e+20, 2.2862565483959524e+20, -1.8313998735554846e+21, 1.2972965708508991e+21, 5.859492427246332e+21, -1.1196558254911795e+22, -5.730829823247838e+21, 3.5106188300223485e+22, -2.0447641420675473e+22, -5.098247379997288e+22, 7.904047639721446e+22, 1.1584239947540404e+22, -1.1174778631479772e+23, 7.048585308358153e+22, 5.788002366698588e+22, -9.831245887061986e+22, 2.392457169565681e+22, 4.335168283561858e+22, -3.832481814876756e+22, 5.100952088891277e+21, 9.373640805973021e+21, -6.401525442245501e+21, 1.7601884610859342e+21, -1.8942990922653077e+20,),
    (9, 14): (-45619233254.260956, 500098767932.07, 27851956445657.0, -318106959581913.2, -1632690976951243.2, 2.912629173602988e+16, -2.354580263996976e+16, -8.83314659052879e+17, 2.7682600371810724e+18, 1.031257432287076e+19, -6.050609370253117e+19, -1.516898415115636e+19, 6.063564102398926e+20, -7.609108141128668e+20, -3.0480061398943977e+21, 8.10165731012179e+21, 5.459170000310136e+21, -3.967044492105699e+22, 2.03535058044018e+22, 1.0466501323090751e+23, -1.4907887749920862e+23, -1.2188758595660507e+23, 4.067435784552697e+23, -9.021869013190515e+22, -5.7764501911646904e+23, 5.261082349208105e+23, 3.449998250638776e+23, -7.692913100063285e+23, 1.5844490505104985e+23, 5.043759212156049e+23, -3.8988357092801726e+23, -6.990242400773002e+22, 2.1825838218629224e+23, -8.401352765980744e+22, -2.4947893174241872e+22, 3.1296028514380983e+22, -1.0210923635533232e+22, 1.210079727798759e+21,),
    (8, 15): (213143195371.297, -2023162299735.66, -132885592854359.66, 1297514949011655.8, 9624973786054048.0, -1.2503656517204808e+17, -7.247162778533909e+16, 4.255443414181918e+18, -7.487625027513235e+18, -6.4870285962127835e+19, 2.204253219040451e+20, 4.3220481193517744e+20, -2.7486381710832225e+21, -6.665771794699101e+18, 1.8772977034530155e+22, -2.033259687697536e+22, -7.273586283044506e+22, 1.5566343220407813e+23, 1.3208495607201656e+23, -6.122942085271666e+23, 1.0905177633124781e+23, 1.4282902551035674e+24, -1.243632740310111e+24, -1.873809567354062e+24, 3.2685394283956884e+24, 7.395485679089611e+23, -4.613042769270052e+24, 1.7558091392542512e+24, 3.5497919522141657e+24, -3.3159717790408553e+24, -9.368845242841057e+23, 2.5130611754989967e+24, -6.670291885539624e+23, -8.073561790791942e+23, 5.882308060602504e+23, -1.3678796002019567e+22, -1.2390893981569917e+23, 5.070773825372974e+22, -6.704089389821468e+21,),
    (7, 16): (-882890563585.4156, 7156790894841.194, 559609106894452.2, -4620535393769036.0, -4.668477246552878e+16, 4.636445504357747e+17, 9.608879643473495e+17, -1.7161435063778392e+19, 8.742771674048752e+18, 3.06401267526309e+20, -5.779824668481488e+20, -2.9097646622902903e+21, 9.187510168015762e+21, 1.387113234873253e+22, -7.783529056471758e+22, -9.220214318010644e+21, 4.034339622721253e+23, -2.880463759907708e+23, -1.3181900360885748e+24, 1.9061655273122874e+24, 2.5447471998511187e+24, -6.509286810484665e+24, -1.750906446951355e+24, 1.3908039619041345e+25, -4.639724840974347e+24, -1.8935433175253632e+25, 1.5855862835650264e+25, 1.4847182005616272e+25, -2.344635265233645e+25, -3.047900695292516e+24, 1.9889518975181525e+25, -6.161197891490234e+24, -9.205676623357301e+24, 6.62306236208997e+24, 1.355439113114482e+24, -2.7506003427625513e+24, 5.939443649291502e+23, 3.740704811830176e+23, -2.1288010091661018e+23, 3.191479875534491e+22,),
    (6, 17): (3192729964996.0264, -21687381405110.633, -2049865088024826.5, 1.4076814210988078e+16, 1.888696611859768e+17, -1.4585603025688271e+18, -5.513804070118979e+18, 5.74924023849192e+19, 4.356869251322979e+19, -1.1406269376308579e+21, 7.584751358037556e+20, 1.2962990027844916e+22, -2.069144245267212e+22, -8.908656848859356e+22, 2.222595906338787e+23, 3.614232245222451e+23, -1.4198910287173508e+24, -6.464070229483425e+23, 5.976035600397027e+24, -1.4251701842247742e+24, -1.7142439274684944e+25, 1.3105815305842017e+25, 3.324462037394098e+25, -4.338754454856091e+25, -4.0298022665428755e+25, 8.806951965853536e+25, 1.9735477453431882e+25, -1.1909180256616323e+26, 2.5066043653123117e+25, 1.0679374108800303e+26, -6.043457307926658e+25, -5.833919730990015e+25, 5.88239815938185e+25, 1.3046646114298838e+25, -3.1847209081247674e+25, 4.630277690467435e+24, 8.949107609457848e+24, -3.7822590194354436e+24, -7.266364372882285e+23, 7.421657595224345e+23, -1.288596150215865e+23,),
    (5, 18): (-9876500523030.637, 54739033387556.86, 6403540012339602.0, -3.5680368991709308e+16, -6.337206653770424e+17, 3.791769350241361e+18, 2.229404965864358e+19, -1.567732632328389e+20, -3.4154332304863016e+20, 3.3513041357301487e+21, 1.7407793975400598e+21, -4.25748691274105e+22, 1.7798150101759729e+22, 3.471636036337148e+23, -3.71617837071728e+23, -1.8912443140363344e+24, 3.115694892680576e+24, 6.931561906578465e+24, -1.6196101148456363e+25, -1.6274193087382497e+25, 5.786659636729528e+25, 1.8526972915906606e+25, -1.4783880578821587e+26, 2.022738804291036e+25, 2.7330236380135014e+26, -1.3510555308206409e+26, -3.61700233954051e+26, 3.0215628753202296e+26, 3.274179713440176e+26, -4.1685311079829104e+26, -1.7464418795039025e+26, 3.863008700152643e+26, 1.452218370847905e+25, -2.396322704876132e+26, 5.513062360456748e+25, 9.311069290593945e+25, -4.3542253940867666e+25, -1.8365126540084485e+25, 1.501264685873095e+25, 1.266276110229499e+23, -2.0940990122377773e+24, 4.333103595747459e+23,),
    (4, 19): (25415280481257.41, -110480952311319.62, -1.6596978061022436e+16, 7.224876336052829e+16, 1.7293494385207662e+18, -7.830923589902344e+18, -6.817811323755096e+19, 3.3574272753468283e+20, 1.3289705940849533e+21, -7.577294939980913e+21, -1.410437684813436e+22, 1.0380031141873284e+23, 7.623660314457432e+22, -9.378650663615626e+23, -3.620264498660064e+22, 5.886114337586675e+24, -2.624390512078671e+24, -2.649716092829519e+25, 2.1942382838774934e+25, 8.702829737570357e+25, -1.0252143443635852e+26, -2.0896652042788692e+26, 3.268018746559503e+26, 3.594715958605817e+26, -7.561675829619393e+26, -4.117319640272377e+26, 1.3010793116840013e+27, 2.255679415893026e+26, -1.6741175832345512e+27, 1.662393760080047e+26, 1.5966805027792362e+27, -5.1101336772458504e+26, -1.0993876955942091e+27, 5.757004307811419e+26, 5.159333833988334e+26, -3.9052249891830865e+26, -1.4311364365973628e+26, 1.6644297353492074e+26, 1.1602799688832396e+25, -4.13646796909284e+25, 5.047170160713485e+24, 4.600776295956517e+24, -1.1822868940532206e+24,),
    (3, 20): (-52238704881070.97, 167175251994679.3, 3.4281292022279668e+16, -1.0958555314772725e+17, -3.704376756783078e+18, 1.2057657669141641e+19, 1.571021996759092e+20, -5.312297928992038e+20, -3.469022618862355e+21, 1.2473822214239619e+22, 4.571255420797765e+22, -1.8015611981940786e+23, -3.860722331505216e+23, 1.7419433652602291e+24, 2.1465228718978125e+24, -1.1908600911909714e+25, -7.60068634907926e+24, 5.971231468982431e+25, 1.3347804141457947e+25, -2.2513129785822057e+26, 1.8863624427163444e+25, 6.486364212881675e+26, -2.109536312863234e+26, -1.441099623498428e+27, 7.60149617932573e+26, 2.4747629390722694e+27, -1.758654022002798e+27, -3.267938525930712e+27, 2.921911267822521e+27, 3.2671544529946305e+27, -3.608642040067751e+27, -2.3910382057055394e+27, 3.335959890652069e+27, 1.1858389962651504e+27, -2.284627325558309e+27, -3.093392278557576e+26, 1.1270950602473839e+27, -3.312173569086754e+25, -3.792203863808183e+26, 5.951826441777002e+25, 7.796071594240732e+25, -2.013744799797587e+25, -7.392737122885807e+24, 2.517534935497765e+24,),
    (2, 21): (80415075920403.2, -168584299830862.3, -5.292543894450523e+16, 1.1068946948242166e+17, 5.859961275785281e+18, -1.2313645397638932e+19, -2.603067653458728e+20, 5.5335431276239965e+20, 6.172361503193911e+21, -1.3367571940045733e+22, -9.011317013785576e+22, 2.0035756735946465e+23, 8.809653280332727e+23, -2.028754853210204e+24, -6.083607170164295e+24, 1.4666710541446365e+25, 3.072796887423665e+25, -7.861777480794966e+25, -1.1602487553687306e+26, 3.208319265258361e+26, 3.3106156269747186e+26, -1.0153847841526537e+27, -7.129523244607653e+26, 2.523394249355439e+27, 1.1357333139204053e+27, -4.961218213080799e+27, -1.253935548380129e+27, 7.740049259051523e+27, 7.364164904551361e+26, -9.567897053665614e+27, 3.146989460271375e+26, 9.311427993138173e+27, -1.2891008277959039e+27, -7.04483041642589e+27, 1.5962134156276932e+27, 4.056658642372455e+27, -1.2210765480051744e+27, -1.7172319747299082e+27, 6.259004992348003e+26, 5.036851767455781e+26, -2.110957579375831e+26, -9.142839396390106e+25, 4.264929708146884e+25, 7.735876802868412e+24, -3.928774651506367e+24,),
    (1, 22): (-82420995219969.81, 84976684994232.44, 5.4306525439110376e+16, -5.584713608986528e+16, -6.099671430668849e+18, 6.259139964803982e+18, 2.7835000544840745e+20, -2.8509788436836883e+20, -6.866227146136377e+21, 7.021396121190307e+21, 1.0566577073501437e+23, -1.0790208334316283e+23, -1.104681848749595e+24, 1.1266655671326715e+24, 8.293181711928726e+24, -8.44892221356119e+24, -4.644465389221695e+25, 4.727033662807858e+25, 1.993312146775488e+26, -2.026954545877184e+26, -6.682798344571985e+26, 6.790152534846234e+26, 1.7737130869048456e+27, -1.800896429232889e+27, -3.759476337885245e+27, 3.8145602402718426e+27, 6.393117147414297e+27, -6.482845107378007e+27, -8.729678069801689e+27, 8.8472494916172e+27, 9.541266486398208e+27, -9.664778026675207e+27, -8.282292647139011e+27, 8.38549878604417e+27, 5.63216718543535e+27, -5.69982084532046e+27, -2.934754154323561e+27, 2.968780289446153e+27, 1.1309050483720338e+27, -1.14357625339581e+27, -3.0357539495312574e+26, 3.068661851423195e+26, 5.067313479942915e+25, -5.120513621464625e+25, -3.9597832609909437e+24, 4.000086398507391e+24,),
    (0, 23): (42189715702840.97, 0.0, -2.778481101311081e+16, 0.0, 3.1385283211499996e+18, 0.0, -1.4486387749510863e+20, 0.0, 3.6341499869780876e+21, 0.0, -5.7179919065432055e+22, 0.0, 6.144339925144987e+23, 0.0, -4.766924608251481e+24, 0.0, 2.774466490672939e+25, 0.0, -1.2449342046124282e+26, 0.0, 4.392130563430048e+26, 0.0, -1.2355529146787609e+27, 0.0, 2.7982068996977173e+27, 0.0, -5.131998439010333e+27, 0.0, 7.641216535678268e+27, 0.0, -9.228395023257356e+27, 0.0, 8.999255845917453e+27, 0.0, -7.02322235515725e+27, 0.0, 4.322773732100187e+27, 0.0, -2.050902994929233e+27, 0.0, 7.234243234844319e+26, 0.0, -1.7860680966743495e+26, 0.0, 2.753863007576946e+25, 0.0, -1.9955529040412654e+24,),
    (24, 0): (-0.00243758516411674, 0.142532826008654, -1.8610365296691695, -21.46624737353141, 919.1772586824213, -13178.720561492215, 115483.67558831906, -711366.5039293814, 3284995.2453431203, -11803957.86572785, 33803570.08107751, -78396278.48110828, 148820692.64712077, -232788746.17964387, 301054094.73163724, -321992726.1709162, 284035551.6287338, -205377949.70150283, 120480425.97165598, -56439212.60907996, 20613276.76503027, -5656126.4705946, 1096810.602571287, -134014.07915930258, 7759.443395472963,),
    (23, 1): (-0.01462551098470044, 1.5627633600296094, -37.894795160329934, 41.592232727018434, 12195.851488908953, -253594.77206025904, 2841721.627656023, -21484896.00659966, 119342880.45482686, -509860621.04535985, 1723787621.1746106, -4700601024.341689, 10473379019.538673, -19232277423.371304, 29258632681.858444, -36961691707.30418, 38753841005.41014, -33611183603.676662, 23954130514.142086, -13879248789.110796, 6433196311.817708, -2328377598.5334306, 633957012.2756894, -122125174.43287161, 14838573.84977904, -855110.651728,),
    (22, 2): (0.3784350967291239, -23.972239674330496, 296.19336605959677, 6076.8159913073805, -218287.00727954487, 2920354.059689318, -22333520.489380427, 101593098.48619294, -196134308.86863732, -816387174.0036687, 8858816499.2238, -42720618585.570526, 142168465571.59805, -360533559626.4707, 725441493644.8472, -1181674100823.7341, 1574325115625.2903, -1722753478532.7034, 1547767795714.6455, -1136341160719.747, 675418008398.996, -320105945670.87976, 118157202202.5854, -32742138178.65552, 6408563165.241615, -790045872.0982975, 46140675.8389293,),
    (21, 3): (-5.781647311139393, 286.0567271867632, -1515.5475255279532, -109801.76230282526, 2514753.744389914, -24682859.3094135, 116869209.79555807, -21123530.681608263, -3473351828.635282, 25189061479.55802, -99350464746.54276, 232013396190.7104, -183301610933.0527, -937754233275.3588, 4856531626848.576, -13302600634224.988, 26020908385635.44, -39252846362406.84, 47049791551899.14, -45348671778596.984, 35221142340407.64, -21927310167874.375, 10805430205129.81, -4124076839561.303, 1176549652192.3267, -236268697002.22644, 29801136075.94012, -1776681945.3419418,),
    (20, 4): (74.36643853953044, -3076.6196513549557, -768.5699647843563, 1427179.4920021992, -24714666.288863536, 174994346.4431103, -244943839.3411235, -5396650611.183213, 47913893333.46521, -194064258015.2771, 329738606099.49493, 731422953100.205, -6468608766015.004, 20806950606946.24, -37778765357604.836, 25808637162844.9, 71037466733870.5, -291157299743701.8, 593858576409699.4, -849811316364870.2, 924045092008893.0, -784512865736103.2, 523452922140380.8, -272796508693858.62, 109068455955320.84, -32366393783130.992, 6724443372694.813, -873792852119.3905, 53485603597.40202,),
    (19, 5): (-860.5259316717094, 30698.799277010305, 156879.03926213854, -15927830.867615715, 218475639.43421507, -1005548988.1568577, -3910643330.9654284, 73144214666.92601, -387035824167.0179, 744396264858.6042, 2292555604245.0186, -19758871397414.902, 60015165298012.99, -73804647385392.92, -119628762018730.92, 750853696957756.4, -1685774638102166.5, 1967636155922117.0, -146593598516449.0, -4301052430104855.0, 9768294376027562.0, -1.3297814205600646e+16, 1.3004645411803512e+16, -9592590057392188.0, 5395417174304190.0, -2292234902865193.5, 715062087659766.8, -154946880774542.62, 20875298855035.83, -1318719472182.8352,),
    (18, 6): (9159.02368941324, -286548.87098154303, -2762923.661096722, 160200435.88540256, -1758896069.0395763, 3684957456.04213, 72714264685.08447, -679396927240.7451, 2179318022618.5154, 2355114343358.424, -45709457380273.13, 165582868351987.47, -190034758658269.7, -631093659326404.1, 3206077858572349.0, -6067927850342552.0, 2575354619485180.5, 1.5226867966408002e+16, -4.3199278594170904e+16, 5.638680904124074e+16, -2.5550511725811316e+16, -4.89418448123902e+16, 1.264898218068348e+17, -1.598063630306967e+17, 1.3711496700364894e+17, -8.559120408880398e+16, 3.931742099387878e+16, -1.3045617752738746e+16, 2973331588160644.5, -417960213455603.8, 27382364268593.02,),
    (17, 7): (-90460.2274779061, 2506878.722064594, 35225710.97943992, -1478428767.941387, 12866325960.768232, 9237180107.09441, -814007570200.23, 5056920557091.403, -6162506992820.322, -73683482270707.56, 419472103234511.06, -733176022698574.6, -1521972346184812.2, 1.0662367927361438e+16, -2.137766461451113e+16, 767476978126232.8, 9.278885626045586e+16, -2.1776511092582694e+17, 1.821374435094377e+17, 2.015475766247719e+17, -7.859883515489065e+17, 1.0355806010652618e+18, -5.260363844096961e+17, -5.141451351297547e+17, 1.3617305902099523e+18, -1.5161123422130836e+18, 1.0984416553775809e+18, -5.585139870113694e+17, 1.999133943239597e+17, -4.837368297941303e+16, 7141533077770208.0, -487577842910411.44,),
    (16, 8): (831755.6973629587, -20537919.9512932, -379628116.0283033, 12606727581.267504, -84412107763.01646, -360490712448.52655, 7316793760784.744, -30564117011989.895, -41685287593478.99, 813529173752921.4, -2605386380384627.5, -697437503806868.8, 2.7960806931416016e+16, -7.667067862031115e+16, 2.2610905094751796e+16, 3.6225473123167334e+17, -9.359403269467667e+17, 6.130186187762072e+17, 1.805442581518551e+18, -5.063419399714483e+18, 4.719653281422576e+18, 2.1613829844516244e+18, -1.1312976393133855e+19, 1.3807110337434337e+19, -6.0458283642237e+18, -5.665212318257741e+18, 1.2328939850411504e+19, -1.1332756810871818e+19, 6.608850164918868e+18, -2.598955360052147e+18, 6.74949632451584e+17, -1.053954521663495e+17, 7535869360790394.0,),
    (15, 9): (-7122293.230752446, 157190620.6299533, 3625038514.4652295, -99519698152.62598, 482650821727.11505, 4598585030758.083, -56411432282245.19, 138344858888362.55, 872832260223166.5, -6418490549640884.0, 9808206053686988.0, 4.734041205403194e+16, -2.3790829421355277e+17, 2.57496350913574e+17, 9.573502229022071e+17, -3.6219384960873216e+18, 3.171637189742166e+18, 8.097681314901973e+18, -2.5565580812864877e+19, 2.0973892087473594e+19, 2.836664402499871e+19, -8.731523696393427e+19, 7.623922906304802e+19, 2.7764019710475624e+19, -1.3505394485982226e+20, 1.382714135720176e+20, -4.0435819180034425e+19, -6.006314714343575e+19, 9.118365232844967e+19, -6.49546844334572e+19, 2.8794988228108386e+19, -8.133601533093122e+18, 1.354088175205158e+18, -1.0192043003009848e+17,),
    (14, 10): (56716496.83018308, -1120003868.5450897, -31248766766.072178, 726654775856.3373, -2247251685593.943, -43883901467193.945, 380249788167106.2, -279572131193833.53, -9000544647697843.0, 3.951565255556249e+16, 9460019611114162.0, -5.20308586099697e+17, 1.312773637343338e+18, 1.0456593207811116e+18, -1.1324460197267399e+19, 1.7694407522175205e+19, 2.0202504102978322e+19, -1.0873398355612795e+20, 1.1339221132489186e+20, 1.4401274806118307e+20, -5.0488291765354876e+20, 3.9619564733277975e+20, 4.233637986393756e+20, -1.1792103927977985e+21, 8.348257459690301e+20, 4.395271335924696e+20, -1.3256592951600504e+21, 1.0192871508618665e+21, -8.241692933939506e+19, -5.197297508334198e+20, 5.224066664764803e+20, -2.7177760049472864e+20, 8.495464785404743e+19, -1.5217978154678962e+19, 1.2124917093473748e+18,),
    (13, 11): (-418860827.06884015, 7395777685.380303, 245018820155.16406, -4893661291269.718, 6700041077333.915, 352293785625465.3, -2239211298726289.5, -2734858276558604.0, 7.032431698910852e+16, -1.847147859490701e+17, -5.466697673505837e+17, 3.8000886330364114e+18, -3.8041445403299046e+18, -2.317842494367969e+19, 7.423758167247279e+19, -6.323956658878372e+18, -3.5517112088002514e+20, 6.12427176055723e+20, 3.322427938313169e+20, -2.375243389629291e+21, 2.360671605780072e+21, 2.4155147302911434e+21, -7.648124133046029e+21, 4.737716931349309e+21, 6.097981184285585e+21, -1.247855063556519e+22, 5.898213124739912e+21, 5.970106035472179e+21, -1.0188537762688033e+22, 5.08060401518066e+21, 1.2629375583833804e+21, -3.3063200344809946e+21, 2.1717260848599545e+21, -7.694943791669898e+20, 1.4995904988093884e+20, -1.2724298862519122e+19,),
    (12, 12): (2857644749.7543783, -45011976938.66083, -1750981978545.6025, 30263772486077.004, 11170168055766.121, -2468784887114299.0, 1.1324851946919974e+16, 4.314093662219779e+16, -4.5187268373915885e+17, 5.217279759314025e+17, 5.701372924151681e+18, -2.0601640596628124e+19, -1.2568714069991922e+19, 1.999490670717839e+20, -2.8530504474679548e+20, -6.967538358221081e+20, 2.5613757588215594e+21, -8.281691194444647e+20, -8.344705838542579e+21, 1.3657714780096952e+22, 6.137553949997428e+21, -4.002756443826498e+22, 3.1793679220063087e+22, 3.8870792603005385e+22, -8.918149108335958e+22, 3.2756759431669864e+22, 7.498345200972703e+22, -9.920005241984296e+22, 1.8562368272559478e+22, 5.81752824331863e+22, -5.6848348762456535e+22, 1.2671716009592584e+22, 1.4695845148721095e+22, -1.447766139952829e+22, 6.028935014393947e+21, -1.2959261637616856e+21, 1.1790149666928216e+20,),
    (11, 13): (-17920013062.841003, 250817783383.6447, 11388787932059.186, -170861059101343.3, -370958155622709.06, 1.5301451415259434e+16, -4.706292149793444e+16, -3.7751018127838483e+17, 2.433616491356187e+18, 8.879491763808801e+17, -4.07349922643613e+19, 7.882205773422053e+19, 2.641661836018228e+20, -1.1606078347377478e+21, 5.946068165468652e+19, 6.954038797450828e+21, -1.0386849099066192e+22, -1.6789659852618387e+22, 6.0991556381789236e+22, -1.7129873537473026e+22, -1.5603735993008e+23, 2.0873846132281508e+23, 1.3001554272694774e+23, -5.219289211301055e+23, 2.6024320544029345e+23, 5.291186711035175e+23, -7.682841948685275e+23, 3.427666852559173e+22, 6.989053304057751e+23, -5.4108642148912896e+23, -1.0044218956277989e+23, 3.835097265072175e+23, -2.0292321463475705e+23, -2.3214887620427727e+22, 7.804103107048743e+22, -4.061438335088026e+22, 9.803401061748546e+21, -9.636961275969157e+20,),
    (10, 14): (102643274822.08714, -1269310109532.9685, -67157578751814.76, 874044518185275.8, 3577634123622807.5, -8.410463803796283e+16, 1.4140927207662754e+17, 2.5435627809519063e+18, -1.0870996339137042e+19, -2.4608411978941833e+19, 2.2703799098885367e+20, -1.333434768070106e+20, -2.139917286495125e+21, 4.6672205619224977e+21, 8.585465025128909e+21, -4.087131506986207e+22, 7.646738895092861e+21, 1.765953305268951e+23, -2.3070277554948106e+23, -3.563959011394083e+23, 1.0456820691759406e+24, -7.114334804463203e+22, -2.3144897988361815e+24, 2.1326164148170572e+24, 2.2960521408214728e+24, -5.060267917228301e+24, 7.10392109640353e+23, 5.407248926725834e+24, -4.439853814566441e+24, -1.833232300851353e+24, 4.5342461551994276e+24, -1.58675840435491e+24, -1.5485496653540097e+24, 1.607660984044484e+24, -3.0661972011532215e+23, -3.154459204082816e+23, 2.3274722642685286e+23, -6.46605321471498e+22, 6.929728734733568e+21,),
    (9, 15): (-532857988428.2425, 5776499553338.135, 356838006091961.7, -4013149672570240.5, -2.4910185746955292e+16, 4.085685685758188e+17, -1.2847001382028266e+17, -1.4164597730821032e+19, 3.849371225589595e+19, 2.0316171756538295e+20, -1.0102834827645831e+21, -8.5675909538739e+20, 1.2060262421193602e+22, -9.958844081473646e+21, -7.617175223034583e+22, 1.5707179321045038e+23, 2.3061389197548044e+23, -9.796542517113916e+23, 5.686146338859582e+22, 3.391284318347299e+24, -3.212503543802096e+24, -6.412640284471867e+24, 1.2758637889734154e+25, 3.584534257480603e+24, -2.597577505000212e+25, 1.2302020475464926e+25, 2.861533098047127e+25, -3.3553513121412987e+25, -1.0635942855759824e+25, 3.815310400163474e+25, -1.2809454512843753e+25, -2.021135784710855e+25, 1.844825238423459e+25, 1.0824591529410833e+24, -8.501601554411021e+24, 3.6552589397594486e+24, 7.212282378048197e+23, -1.1143697434922889e+24, 3.6949847154770634e+23, -4.3633858879888325e+22,),
    (8, 16): (2483129710083.9814, -23351274280628.652, -1694054110520423.0, 1.6341726789853696e+16, 1.4075180252553811e+17, -1.7399707430602156e+18, -1.9144146602613773e+18, 6.653176154918332e+19, -9.343514729516931e+19, -1.174835537059947e+21, 3.497305178914876e+21, 9.946475399022025e+21, -5.125995424784966e+22, -2.368257402534306e+22, 4.140794115253636e+23, -2.9701835734954877e+23, -1.9832653894338145e+24, 3.286352349393635e+24, 5.30782773957378e+24, -1.630820297235064e+25, -4.003212866053852e+24, 4.842504928570364e+25, -2.4383181964256964e+25, -8.85160019325774e+25, 1.0335113042595184e+26, 8.639763553654201e+25, -2.0485215452014057e+26, 1.11071329843085e+24, 2.369763610978918e+26, -1.2373938852644132e+26, -1.495759774161106e+26, 1.6778957228105236e+26, 2.2753316706531924e+25, -1.0684019601850372e+26, 3.5050612790460317e+25, 2.907764212867536e+25, -2.356408129306876e+25, 1.4412335164794663e+24, 4.317494260389903e+24, -1.812561287222245e+24, 2.3892570053206072e+23,),
    (7, 17): (-10262346316058.656, 82548633650603.2, 7105311571573289.0, -5.8114242018605624e+16, -6.66091193264617e+17, 6.413370427019113e+18, 1.6966770973038543e+19, -2.6380777270167768e+20, 4.259934544763618e+19, 5.315435828534555e+21, -8.457384384588331e+21, -5.865177551667359e+22, 1.6176616935276786e+23, 3.5347537669300377e+23, -1.5952046162724129e+24, -8.165968270776126e+23, 9.682683504908842e+24, -3.9099855048840934e+24, -3.8112948859836436e+25, 4.196238603231969e+25, 9.589913339050491e+25, -1.8246900979951633e+26, -1.3227969449459527e+26, 4.874347790464589e+26, -6.47099503083769e+24, -8.581462999085894e+26, 4.449403241367879e+26, 9.754721616809738e+26, -1.0014259252318358e+27, -6.095685372043289e+26, 1.2196218461573726e+27, 3.719207565446124e+24, -8.933166702949939e+26, 3.437761648665352e+26, 3.581622189752071e+26, -2.8926073342203098e+26, -3.7620587830284273e+25, 1.0530173206811847e+26, -2.517200260600894e+25, -1.2668399314184093e+25, 7.534457681618323e+24, -1.1267534376349527e+24,),
    (6, 18): (37036876961364.89, -250001637798075.1, -2.5941431523105576e+16, 1.7684919012813363e+17, 2.652595938450976e+18, -2.0083859452982977e+19, -8.90871714634065e+19, 8.73368188383589e+20, 9.891105619443452e+20, -1.927942925790694e+22, 7.654374963408765e+21, 2.4688546664029014e+23, -3.3352521108546646e+23, -1.9545858618018786e+24, 4.261302681444924e+24, 9.618050843478111e+24, -3.1520741895371857e+25, -2.6129401303332496e+25, 1.5388530947994636e+26, 5.783678984642516e+24, -5.199435886733894e+26, 2.6646337950040884e+26, 1.2280005553947325e+27, -1.2265644735854605e+27, -1.9681580604657545e+27, 3.1445528499235515e+27, 1.8759622954192198e+27, -5.359418785581151e+27, -3.114253525460456e+26, 6.282094560011869e+27, -1.9831178703511563e+27, -4.945252531639721e+27, 3.2507733568336623e+27, 2.346519923696258e+27, -2.69738071599222e+27, -3.821607718573423e+26, 1.3019408547831244e+27, -2.353754658639731e+26, -3.3056278089559466e+26, 1.4765663141363176e+26, 2.3094683730124006e+25, -2.606151837762856e+25, 4.5157208815779395e+24,),
    (5, 19): (-114368762165658.34, 630671624577501.8, 8.081899460790278e+16, -4.4783678440157286e+17, -8.805723591784302e+18, 5.202964013323243e+19, 3.4649042580104505e+20, -2.361315296553703e+21, -6.16667899307827e+21, 5.568342109771317e+22, 4.486916695839325e+22, -7.854383863437255e+23, 1.5665239598104246e+23, 7.175775755463949e+24, -6.278591056392423e+24, -4.440798981214558e+25, 6.362306015002091e+25, 1.8945953884515908e+26, -3.837619386303321e+26, -5.473979957566401e+26, 1.582907642473171e+27, 9.596034874861233e+26, -4.7004394775019344e+27, -4.0417274859904094e+26, 1.0258668656542657e+28, -3.024768402979994e+27, -1.6480780383440454e+28, 1.0221759818509086e+28, 1.9114558460516656e+28, -1.8407559326359776e+28, -1.5075730469184473e+28, 2.202936522675061e+28, 6.582120254804304e+27, -1.8233305318300452e+28, 4.85716981163672e+26, 1.025521941386593e+28, -2.7661465418787363e+27, -3.6368793955571614e+27, 1.818795317665723e+27, 6.477381230386846e+26, -5.665359258278052e+26, 4.0000898467138086e+24, 7.308726156097121e+25, -1.5098232040847274e+25,),
    (4, 20): (293842714956024.2, -1272288294123099.0, -2.090029093524452e+17, 9.06109173846423e+17, 2.3850954904922096e+19, -1.0716757469931215e+20, -1.0373537306892858e+21, 5.025599573001974e+21, 2.2573344211087403e+22, -1.2442521968171477e+23, -2.7412626244748463e+23, 1.8768120142127383e+24, 1.8347738317899515e+24, -1.8760739473984748e+25, -4.260553203491785e+24, 1.3106972398695474e+26, -3.7571009464143313e+25, -6.62253074353154e+26, 4.4990284004250944e+26, 2.4699478851903358e+27, -2.518720272058739e+27, -6.855278629777116e+27, 9.350367473503479e+27, 1.4062913482985649e+28, -2.511694721134012e+28, -2.061218557216059e+28, 5.051822498188839e+28, 1.9257684119305933e+28, -7.70742612301596e+28, -5.408697232717197e+27, 8.917229793337718e+28, -1.509537003018289e+28, -7.724554377096301e+28, 2.873268508151819e+28, 4.863148184912049e+28, -2.764114278653895e+28, -2.0906881580726145e+28, 1.6886355530576422e+28, 5.246055612174817e+27, -6.620459428717722e+27, -3.0790344017399127e+26, 1.5315742015191406e+27, -1.98845420886152e+26, -1.5983983729245766e+26, 4.102159166653084e+25,),
    (3, 21): (-603113069403024.0, 1924331702480426.5, 4.3090275139627584e+17, -1.373470475508259e+18, -5.0821476289470915e+19, 1.6467743325138656e+20, 2.359972094393409e+21, -7.915857478787848e+21, -5.7308228897377024e+22, 2.031479756939683e+23, 8.358035505335206e+23, -3.214050160177131e+24, -7.892891470110686e+24, 3.414266401478034e+25, 5.00018751767766e+25, -2.5738175138931754e+26, -2.1095099256943213e+26, 1.4296260028446875e+27, 5.3091055605872174e+26, -6.005063390080899e+27, -2.507355394805596e+26, 1.9414682619966765e+28, -4.1510185928464607e+27, -4.885035879777123e+28, 2.0675670961714665e+28, 9.616224790968234e+28, -5.829580963770845e+28, -1.4799013421375212e+29, 1.1533710274928303e+29, 1.7665210548915707e+29, -1.6978297966744643e+29, -1.6055070727888197e+29, 1.8949757834247982e+29, 1.0691147917241915e+29, -1.604096723892518e+29, -4.76892905948336e+28, 1.0157376928732024e+29, 1.0245827655619815e+28, -4.668490911703039e+28, 2.297748768687117e+27, 1.4724550232389536e+28, -2.4629438247658003e+27, -2.852400717657354e+27, 7.481328659235337e+26, 2.5600473613562427e+26, -8.709464210423802e+25,),
    (2, 22): (927236196224660.4, -1939768538665336.0, -6.642420848254397e+17, 1.386549585679414e+18, 8.009915923098059e+19, -1.6792036644429536e+20, -3.879367924085106e+21, 8.218916524512977e+21, 1.0045669154684159e+23, -2.1646072020023153e+23, -1.60529862210045e+24, 3.5423191713071487e+24, 1.723023195499133e+25, -3.924093731379158e+25, -1.311626428550403e+26, 3.1116952226166376e+26, 7.342211638435078e+26, -1.8354927218204137e+27, -3.094920752483143e+27, 8.276030179017216e+27, 9.960952870429846e+27, -2.908225014529399e+28, -2.4582470593175863e+28, 8.073452671428951e+28, 4.613501640738424e+28, -1.786370954397341e+29, -6.379693475309626e+28, 3.165602427519669e+29, 5.8886003340327e+28, -4.497106884443294e+29, -2.1157231658389216e+28, 5.105967075051157e+29, -3.4461426545159372e+28, -4.597833488224834e+29, 7.499505196675986e+28, 3.239257235299034e+29, -7.898389823487621e+28, -1.7465615158426478e+29, 5.460896812393694e+28, 6.956491558053182e+28, -2.5869890675620597e+28, -1.9280739718486327e+28, 8.160211377693207e+27, 3.3196888309547284e+27, -1.5538839404220916e+27, -2.673307111465947e+26, 1.3567295561083538e+26,),
    (1, 23): (-949268603313921.8, 977395080449149.0, 6.807278698212148e+17, -6.992510771632887e+17, -8.3171000510475e+19, 8.5263352724575e+19, 4.128620508610596e+21, -4.2251964269406684e+21, -1.1084157460283167e+23, 1.1326434126081705e+23, 1.8583473696265416e+24, -1.896467315670163e+24, -2.119797274175021e+25, 2.160759540342654e+25, 1.7399274820117904e+26, -1.7717069794001336e+26, -1.0681695989090817e+27, 1.0866660421802346e+27, 5.041983528680334e+27, -5.124979142321162e+27, -1.8666554894577703e+28, 1.8959363598806373e+28, 5.498210470320486e+28, -5.580580664632404e+28, -1.3011662083594384e+29, 1.31982092102409e+29, 2.4890192429200114e+29, -2.523232565846747e+29, -3.858814350517525e+29, 3.9097557940887136e+29, 4.844907387210112e+29, -4.906430020698494e+29, -4.904594436025012e+29, 4.9645894749977946e+29, 3.9681206306638464e+29, -4.0149421130315614e+29, -2.5288226332786095e+29, 2.5576411248259438e+29, 1.2407963119321859e+29, -1.2544689985650474e+29, -4.521402021777699e+28, 4.5696303100099945e+28, 1.1520139223549553e+28, -1.163921042999451e+28, -1.8313189000386693e+27, 1.8496779867558488e+27, 1.3669537392682668e+26, -1.3802574252952085e+26,),
    (0, 24): (485401468685290.06, 0.0, -3.4792991439250445e+17, 0.0, 4.273207395701127e+19, 0.0, -2.1435653415108537e+21, 0.0, 5.844687629283339e+22, 0.0, -1.0000750138961727e+24, 0.0, 1.1699189691874474e+25, 0.0, -9.896648661695488e+25, 0.0, 6.29370256208713e+26, 0.0, -3.0939194683063286e+27, 0.0, 1.1998211967644424e+28, 0.0, -3.7252346341093444e+28, 0.0, 9.358117764887965e+28, 0.0, -1.9153963148099324e+29, 0.0, 3.206650343980748e+29, 0.0, -4.395132918078325e+29, 0.0, 4.9215508698387624e+29, 0.0, -4.4775348387950634e+29, 0.0, 3.277658265637452e+29, 0.0, -1.9012207767547338e+29, 0.0, 8.536184882279286e+28, 0.0, -2.8599776383548e+28, 0.0, 6.728957650918171e+27, 0.0, -9.916401268407057e+26, 0.0, 6.886389769727123e+25,),
}

# theta / sin(theta) = sum_i THETA_SIN[i] * theta**(2i)
THETA_SIN = (1.0, 0.16666666666666666, 0.019444444444444445, 0.00205026455026455, 0.0002099867724867725, 2.1336045641601196e-05, 2.1633474427786596e-06, 2.192327134456764e-07, 2.2213930853920414e-08, 2.2507674795567867e-09, 2.280510770721821e-10, 2.3106421580996967e-11, 2.3411704028931947e-12, 2.3721016693292245e-13, 2.4034415154237358e-14, 2.435195398382432e-15,)
